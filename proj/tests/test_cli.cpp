#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef LZB_CLI_PATH
#error "LZB_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LZB_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/lzb_cli_" + name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("exit code contract: one positive and one negative per subcommand") {
    std::string cert = write_temp("a1a7.cert",
                                  "alpha:\n1 0 0\n0 1 0\n0 0 1\n"
                                  "beta:\n1 0 0\n0 1 1\n0 0 1\n");
    std::string badcert = write_temp("bad.cert",
                                     "alpha:\n1 0 0\n0 1 0\n0 0 1\n"
                                     "beta:\n1 0 0\n0 1 0\n0 0 1\n");
    std::string mutated = write_temp("mutated_a1.alg",
                                     "field Q\ndim 5\nbasis a1 a2 a3 a4 a5\n"
                                     "[1,1] = 1*3\n[2,1] = 1*4\n[1,3] = 1*5\n[3,1] = 1*1\n");
    std::string splitfs = write_temp("split.fs",
                                     "field Q\nbase dim 1\nquotient dim 1\n");
    std::string badfs = write_temp("bad.fs",
                                   "field Q\nbase dim 1\nquotient dim 2\n"
                                   "f [1,2] = 1*1\nL 1\n1\n");
    std::string ideta = write_temp("id.eta", "eta:\n1 0\n0 1\n");
    std::string swapeta = write_temp("swap.eta", "eta:\n0 1\n1 0\n");
    std::string idcert1 = write_temp("id1.cert", "alpha:\n1\nbeta:\n1\n");

    // validate
    CHECK(run_cli("validate abelian3").exit_code == 0);
    CHECK(run_cli("validate " + mutated).exit_code == 1);
    // invariants
    CHECK(run_cli("invariants A1").exit_code == 0);
    CHECK(run_cli("invariants " + mutated).exit_code == 2);
    // stem
    CHECK(run_cli("stem A1").exit_code == 0);
    CHECK(run_cli("stem class2d").exit_code == 1);
    // isoclinic verify
    CHECK(run_cli("isoclinic verify A1 A7 --cert " + cert).exit_code == 0);
    CHECK(run_cli("isoclinic verify A1 A7 --cert " + badcert).exit_code == 1);
    // isoclinic search
    CHECK(run_cli("isoclinic search A1 A7").exit_code == 0);
    CHECK(run_cli("isoclinic search A1 abelian3 --budget 1000").exit_code == 1);
    // factorset
    CHECK(run_cli("factorset L26").exit_code == 0);
    CHECK(run_cli("factorset " + mutated).exit_code == 2);
    // extend
    CHECK(run_cli("extend " + splitfs).exit_code == 0);
    CHECK(run_cli("extend " + badfs).exit_code == 1);
    // lemma2
    CHECK(run_cli("lemma2 L40").exit_code == 0);
    CHECK(run_cli("lemma2 /no/such/file").exit_code == 2);
    // prop4
    CHECK(run_cli("prop4 " + splitfs + " " + splitfs + " --eta " + ideta).exit_code == 0);
    CHECK(run_cli("prop4 " + splitfs + " " + splitfs + " --eta " + swapeta).exit_code == 1);
    // theorem3
    CHECK(run_cli("theorem3 lambda2 lambda2 --cert " + idcert1).exit_code == 0);
    CHECK(run_cli("theorem3 A1 A7 --cert " + cert).exit_code == 1);
    // epsilon
    CHECK(run_cli("epsilon lambda2").exit_code == 0);
    CHECK(run_cli("epsilon L16 --mode all").exit_code == 1);
    // catalog
    CHECK(run_cli("catalog A1").exit_code == 0);
    CHECK(run_cli("catalog no-such-name").exit_code == 2);
}

TEST_CASE("selected report lines") {
    std::string cert = write_temp("a1a7b.cert",
                                  "alpha:\n1 0 0\n0 1 0\n0 0 1\n"
                                  "beta:\n1 0 0\n0 1 1\n0 0 1\n");
    CHECK(run_cli("isoclinic verify A1 A7 --cert " + cert).out == "OK (strict)\n");
    CHECK(run_cli("validate abelian3").out.rfind("OK", 0) == 0);
    RunResult eps = run_cli("epsilon L16 --mode all");
    CHECK(eps.out.rfind("FAIL witness x=", 0) == 0);

    // example 4.2 b): linear passes, strict fails
    std::string cert42b = write_temp("ex42b.cert",
                                     "alpha:\n1 0 0\n0 1 0\n0 0 1\n"
                                     "beta:\n1 0\n0 1\n");
    RunResult lin = run_cli("isoclinic verify L26 L40 --cert " + cert42b + " --mode linear");
    CHECK(lin.exit_code == 0);
    CHECK(lin.out == "OK (linear)\n");
    RunResult strict = run_cli("isoclinic verify L26 L40 --cert " + cert42b + " --mode strict");
    CHECK(strict.exit_code == 1);
    CHECK(strict.out.rfind("VIOLATION", 0) == 0);
}

TEST_CASE("ideal override flag") {
    // A1 with m = span{a3,a4,a5}: the commutator ideal as the pair ideal
    RunResult r = run_cli("invariants A1 --ideal \"1*3; 1*4; 1*5\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("pair ideal m = span{a3, a4, a5}") != std::string::npos);
    CHECK(r.out.find("Z_Lie(m,q)  = span{a4, a5}") != std::string::npos);
    // a subspace that is not an ideal is an input error
    CHECK(run_cli("invariants A1 --ideal \"1*1\"").exit_code == 2);
}

TEST_CASE("byte-identical output across runs") {
    for (const std::string& args :
         {std::string("invariants A1"), std::string("stem class2d"),
          std::string("catalog"), std::string("factorset L40"),
          std::string("isoclinic search A1 A7")}) {
        RunResult r1 = run_cli(args);
        RunResult r2 = run_cli(args);
        CHECK(r1.exit_code == r2.exit_code);
        CHECK_MESSAGE(r1.out == r2.out, args);
    }
}
