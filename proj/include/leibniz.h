/*
 * leibniz.h - C API for the Leibniz algebra isoclinism library.
 *
 * Exact-arithmetic computations (over Q or GF(p)) on finite-dimensional
 * Leibniz algebras: pair invariants (Lie-center, Lie-commutator), stem
 * detection and reduction, Lie-isoclinism certificates (verify / search),
 * factor sets and extension algebras.
 *
 * Conventions:
 *  - every function returning lzb_status uses the exit-code contract
 *    LZB_OK = success, LZB_NEGATIVE = mathematical negative (violation,
 *    not stem, not found), LZB_EINPUT = malformed input;
 *  - "spec" arguments name either a built-in catalog entry ("A1", "L26",
 *    ...) or a path to an algebra file;
 *  - all char** outputs receive a malloc'd NUL-terminated report; release
 *    with lzb_string_free.  Output is deterministic: identical inputs give
 *    byte-identical reports;
 *  - on LZB_EINPUT, lzb_last_error() describes the problem (thread-local).
 */

#ifndef LZB_LEIBNIZ_H
#define LZB_LEIBNIZ_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    LZB_OK = 0,
    LZB_NEGATIVE = 1,
    LZB_EINPUT = 2
} lzb_status;

typedef struct lzb_algebra lzb_algebra;
typedef struct lzb_pair lzb_pair;

const char* lzb_version(void);
const char* lzb_last_error(void);
void lzb_string_free(char* s);

/* ------------------------------------------------------------ handles -- */

/* Load from a catalog name or a file path. */
lzb_status lzb_algebra_load(const char* spec, lzb_algebra** out);
/* Parse algebra file text directly. */
lzb_status lzb_algebra_parse(const char* text, lzb_algebra** out);
char* lzb_algebra_serialize(const lzb_algebra* a);
void lzb_algebra_free(lzb_algebra* a);
int lzb_algebra_dim(const lzb_algebra* a);
/* LZB_OK if the structure tensor satisfies a Leibniz identity. */
lzb_status lzb_algebra_validate(const lzb_algebra* a);

/* Pair (m, q): ideal_combos is a ';'-separated list of linear combinations
 * ("1*1 + -1*2; 1*3"), NULL for the ideal declared in the file (or the full
 * pair when none is declared). */
lzb_status lzb_pair_create(const lzb_algebra* a, const char* ideal_combos, lzb_pair** out);
void lzb_pair_free(lzb_pair* p);
int lzb_pair_is_stem(const lzb_pair* p);           /* 1, 0, or -1 on error */
char* lzb_pair_lie_center(const lzb_pair* p);      /* "span{...}" */
char* lzb_pair_lie_commutator(const lzb_pair* p);  /* "span{...}" */

/* ----------------------------------------------------------- commands -- */
/* One function per CLI subcommand; *report receives the full text. */

lzb_status lzb_cmd_validate(const char* spec, char** report);
lzb_status lzb_cmd_invariants(const char* spec, const char* ideal_or_null, char** report);
lzb_status lzb_cmd_stem(const char* spec, char** report);
/* mode: "strict" (default when NULL) or "linear" */
lzb_status lzb_cmd_isoclinic_verify(const char* spec1, const char* spec2, const char* cert_path,
                                    const char* mode, char** report);
lzb_status lzb_cmd_isoclinic_search(const char* spec1, const char* spec2, long budget,
                                    char** report);
lzb_status lzb_cmd_factorset(const char* spec, char** report);
lzb_status lzb_cmd_extend(const char* factorset_path, char** report);
lzb_status lzb_cmd_lemma2(const char* spec, char** report);
lzb_status lzb_cmd_prop4(const char* ext1_path, const char* ext2_path, const char* eta_path,
                         char** report);
/* eps_mode: "basis" or "all" (default when NULL: "all") */
lzb_status lzb_cmd_theorem3(const char* spec1, const char* spec2, const char* cert_path,
                            const char* eps_mode, char** report);
/* mode: "basis" (default when NULL) or "all" */
lzb_status lzb_cmd_epsilon(const char* spec, const char* mode, char** report);
/* name NULL or empty: the whole catalog */
lzb_status lzb_cmd_catalog(const char* name, char** report);

#ifdef __cplusplus
}
#endif

#endif /* LZB_LEIBNIZ_H */
