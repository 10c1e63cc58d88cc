// lzb - command line driver for the Leibniz algebra isoclinism library.
// Talks to the shared library exclusively through the C API in leibniz.h.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "leibniz.h"

namespace {

int finish(lzb_status st, char* report) {
    if (st == LZB_EINPUT) {
        std::fprintf(stderr, "%s", lzb_last_error());
    } else if (report) {
        std::fputs(report, stdout);
    }
    lzb_string_free(report);
    return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on pairs of Leibniz algebras: invariants, "
                 "Lie-isoclinism certificates, stem reduction, factor sets"};
    app.set_version_flag("--version", lzb_version());
    app.require_subcommand(1);

    std::string alg1, alg2, cert_file, eta_file, ideal, mode, eps_mode;
    long budget = 200000;

    auto* validate = app.add_subcommand("validate", "check the Leibniz identity");
    validate->add_option("algebra", alg1, "catalog name or algebra file")->required();

    auto* invariants = app.add_subcommand("invariants", "pair invariants and fingerprint");
    invariants->add_option("algebra", alg1)->required();
    invariants->add_option("--ideal", ideal, "ideal generators, ';'-separated combinations");

    auto* stem = app.add_subcommand("stem", "stem test and stem reduction with certificate");
    stem->add_option("pair", alg1)->required();

    auto* iso = app.add_subcommand("isoclinic", "Lie-isoclinism certificates");
    iso->require_subcommand(1);
    auto* iso_verify = iso->add_subcommand("verify", "verify a certificate file");
    iso_verify->add_option("pair1", alg1)->required();
    iso_verify->add_option("pair2", alg2)->required();
    iso_verify->add_option("--cert", cert_file, "certificate file")->required();
    iso_verify->add_option("--mode", mode, "strict|linear (default strict)");
    auto* iso_search = iso->add_subcommand("search", "search for a certificate");
    iso_search->add_option("pair1", alg1)->required();
    iso_search->add_option("pair2", alg2)->required();
    iso_search->add_option("--budget", budget, "assignment budget (default 200000)");

    auto* factorset = app.add_subcommand("factorset", "factor set of a pair, with identity check");
    factorset->add_option("pair", alg1)->required();

    auto* extend = app.add_subcommand("extend", "build the extension algebra from factor-set data");
    extend->add_option("file", alg1, "factor-set data file")->required();

    auto* lemma2 = app.add_subcommand("lemma2", "reconstruct q as m x_f q/m and verify");
    lemma2->add_option("pair", alg1)->required();

    auto* prop4 = app.add_subcommand("prop4", "induced maps and d for an extension isomorphism");
    prop4->add_option("ext1", alg1, "factor-set data file")->required();
    prop4->add_option("ext2", alg2, "factor-set data file")->required();
    prop4->add_option("--eta", eta_file, "eta matrix file")->required();

    auto* theorem3 = app.add_subcommand("theorem3", "constructive isomorphism of stem ideals");
    theorem3->add_option("pair1", alg1)->required();
    theorem3->add_option("pair2", alg2)->required();
    theorem3->add_option("--cert", cert_file)->required();
    theorem3->add_option("--epsilon-mode", eps_mode, "basis|all (default all)");

    auto* epsilon = app.add_subcommand("epsilon", "epsilon-commutativity condition");
    epsilon->add_option("algebra", alg1)->required();
    epsilon->add_option("--mode", eps_mode, "basis|all (default basis)");

    std::string cat_name;
    auto* cat = app.add_subcommand("catalog", "built-in example algebras and their claims");
    cat->add_option("name", cat_name, "entry name (all when omitted)");

    CLI11_PARSE(app, argc, argv);

    char* report = nullptr;
    lzb_status st = LZB_EINPUT;
    if (*validate) {
        st = lzb_cmd_validate(alg1.c_str(), &report);
    } else if (*invariants) {
        st = lzb_cmd_invariants(alg1.c_str(), ideal.empty() ? nullptr : ideal.c_str(), &report);
    } else if (*stem) {
        st = lzb_cmd_stem(alg1.c_str(), &report);
    } else if (*iso_verify) {
        st = lzb_cmd_isoclinic_verify(alg1.c_str(), alg2.c_str(), cert_file.c_str(),
                                      mode.empty() ? nullptr : mode.c_str(), &report);
    } else if (*iso_search) {
        st = lzb_cmd_isoclinic_search(alg1.c_str(), alg2.c_str(), budget, &report);
    } else if (*factorset) {
        st = lzb_cmd_factorset(alg1.c_str(), &report);
    } else if (*extend) {
        st = lzb_cmd_extend(alg1.c_str(), &report);
    } else if (*lemma2) {
        st = lzb_cmd_lemma2(alg1.c_str(), &report);
    } else if (*prop4) {
        st = lzb_cmd_prop4(alg1.c_str(), alg2.c_str(), eta_file.c_str(), &report);
    } else if (*theorem3) {
        st = lzb_cmd_theorem3(alg1.c_str(), alg2.c_str(), cert_file.c_str(),
                              eps_mode.empty() ? nullptr : eps_mode.c_str(), &report);
    } else if (*epsilon) {
        st = lzb_cmd_epsilon(alg1.c_str(), eps_mode.empty() ? nullptr : eps_mode.c_str(),
                             &report);
    } else if (*cat) {
        st = lzb_cmd_catalog(cat_name.empty() ? nullptr : cat_name.c_str(), &report);
    } else {
        return 2;
    }
    return finish(st, report);
}
