#include "leibniz.h"

#include <cstdlib>
#include <cstring>

#include "report.hpp"

using namespace lzb;

struct lzb_algebra {
    AlgebraFile file;
};

struct lzb_pair {
    Pair pair;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lzb_status fail_input(const std::string& msg) {
    g_last_error = msg;
    return LZB_EINPUT;
}

// nothing C++ may cross the ABI: every command runs behind this guard
template <typename Fn>
lzb_status guarded(char** report, Fn&& fn) {
    if (!report) return fail_input("null argument");
    *report = nullptr;
    try {
        CmdResult r = fn();
        *report = dup_string(r.text);
        if (r.status == CmdStatus::InputError) g_last_error = r.text;
        return static_cast<lzb_status>(r.status);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        *report = dup_string("error: " + std::string(e.what()) + "\n");
        return LZB_EINPUT;
    } catch (...) {
        g_last_error = "unknown internal error";
        *report = dup_string("error: unknown internal error\n");
        return LZB_EINPUT;
    }
}

}  // namespace

extern "C" {

const char* lzb_version(void) { return "1.0.0"; }

const char* lzb_last_error(void) { return g_last_error.c_str(); }

void lzb_string_free(char* s) { std::free(s); }

lzb_status lzb_algebra_load(const char* spec, lzb_algebra** out) {
    if (!spec || !out) return fail_input("null argument");
    try {
        auto* h = new lzb_algebra{parse_algebra_file(load_source(spec))};
        *out = h;
        return LZB_OK;
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
}

lzb_status lzb_algebra_parse(const char* text, lzb_algebra** out) {
    if (!text || !out) return fail_input("null argument");
    try {
        auto* h = new lzb_algebra{parse_algebra_file(text)};
        *out = h;
        return LZB_OK;
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
}

char* lzb_algebra_serialize(const lzb_algebra* a) {
    if (!a) return nullptr;
    try {
        return dup_string(serialize_algebra_file(a->file));
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

void lzb_algebra_free(lzb_algebra* a) { delete a; }

int lzb_algebra_dim(const lzb_algebra* a) { return a ? static_cast<int>(a->file.dim) : -1; }

lzb_status lzb_algebra_validate(const lzb_algebra* a) {
    if (!a) return fail_input("null argument");
    try {
        LeibnizAlgebra alg = a->file.to_algebra();
        return check_leibniz(alg).ok() ? LZB_OK : LZB_NEGATIVE;
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
}

lzb_status lzb_pair_create(const lzb_algebra* a, const char* ideal_combos, lzb_pair** out) {
    if (!a || !out) return fail_input("null argument");
    try {
        LoadedPair lp = load_pair_from_text(serialize_algebra_file(a->file),
                                            ideal_combos ? ideal_combos : "");
        *out = new lzb_pair{std::move(lp.pair)};
        return LZB_OK;
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
}

void lzb_pair_free(lzb_pair* p) { delete p; }

int lzb_pair_is_stem(const lzb_pair* p) {
    if (!p) return -1;
    return is_stem(p->pair) ? 1 : 0;
}

char* lzb_pair_lie_center(const lzb_pair* p) {
    if (!p) return nullptr;
    return dup_string(p->pair.z_lie.str(p->pair.q.names));
}

char* lzb_pair_lie_commutator(const lzb_pair* p) {
    if (!p) return nullptr;
    return dup_string(p->pair.k_lie.space.str(p->pair.q.names));
}

lzb_status lzb_cmd_validate(const char* spec, char** report) {
    if (!spec) return fail_input("null argument");
    return guarded(report, [&] { return cmd_validate(spec); });
}

lzb_status lzb_cmd_invariants(const char* spec, const char* ideal_or_null, char** report) {
    if (!spec) return fail_input("null argument");
    return guarded(report,
                   [&] { return cmd_invariants(spec, ideal_or_null ? ideal_or_null : ""); });
}

lzb_status lzb_cmd_stem(const char* spec, char** report) {
    if (!spec) return fail_input("null argument");
    return guarded(report, [&] { return cmd_stem(spec); });
}

lzb_status lzb_cmd_isoclinic_verify(const char* spec1, const char* spec2, const char* cert_path,
                                    const char* mode, char** report) {
    if (!spec1 || !spec2 || !cert_path) return fail_input("null argument");
    return guarded(report, [&] {
        return cmd_isoclinic_verify(spec1, spec2, cert_path, mode ? mode : "");
    });
}

lzb_status lzb_cmd_isoclinic_search(const char* spec1, const char* spec2, long budget,
                                    char** report) {
    if (!spec1 || !spec2) return fail_input("null argument");
    return guarded(report, [&] {
        return cmd_isoclinic_search(spec1, spec2,
                                    budget > 0 ? static_cast<size_t>(budget) : 200000);
    });
}

lzb_status lzb_cmd_factorset(const char* spec, char** report) {
    if (!spec) return fail_input("null argument");
    return guarded(report, [&] { return cmd_factorset(spec); });
}

lzb_status lzb_cmd_extend(const char* factorset_path, char** report) {
    if (!factorset_path) return fail_input("null argument");
    return guarded(report, [&] { return cmd_extend(factorset_path); });
}

lzb_status lzb_cmd_lemma2(const char* spec, char** report) {
    if (!spec) return fail_input("null argument");
    return guarded(report, [&] { return cmd_lemma2(spec); });
}

lzb_status lzb_cmd_prop4(const char* ext1_path, const char* ext2_path, const char* eta_path,
                         char** report) {
    if (!ext1_path || !ext2_path || !eta_path) return fail_input("null argument");
    return guarded(report, [&] { return cmd_prop4(ext1_path, ext2_path, eta_path); });
}

lzb_status lzb_cmd_theorem3(const char* spec1, const char* spec2, const char* cert_path,
                            const char* eps_mode, char** report) {
    if (!spec1 || !spec2 || !cert_path) return fail_input("null argument");
    return guarded(report, [&] {
        return cmd_theorem3(spec1, spec2, cert_path, eps_mode ? eps_mode : "");
    });
}

lzb_status lzb_cmd_epsilon(const char* spec, const char* mode, char** report) {
    if (!spec) return fail_input("null argument");
    return guarded(report, [&] { return cmd_epsilon(spec, mode ? mode : ""); });
}

lzb_status lzb_cmd_catalog(const char* name, char** report) {
    return guarded(report, [&] { return cmd_catalog(name ? name : ""); });
}

}  // extern "C"
