#ifndef LZB_FORMAT_HPP
#define LZB_FORMAT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extension.hpp"

namespace lzb {

// Parsed algebra file: header, relation tensor, optional pair declaration,
// free-form metadata.  Unstated brackets are zero.
struct AlgebraFile {
    Field field = Field::rationals();
    size_t dim = 0;
    std::vector<std::string> names;            // empty = default e1..eN
    std::vector<Scalar> tensor;                // dim^3
    std::vector<Vector> ideal_gens;            // empty = no pair declaration
    bool has_ideal = false;
    std::vector<std::pair<std::string, std::string>> meta;

    LeibnizAlgebra to_algebra() const;         // unvalidated
    std::optional<Subspace> ideal_subspace() const;
    bool semantic_equal(const AlgebraFile& o) const;
};

// Line-based grammar, '#' comments:
//   field Q | field GF <p>
//   dim <n>
//   basis <name1> ... <nameN>
//   [i,j] = <coeff>*<k> (+ <coeff>*<k>)*     (1-based indices or basis names)
//   ideal <combo>; <combo>; ...
//   meta <key> <value>
AlgebraFile parse_algebra_file(const std::string& text);
std::string serialize_algebra_file(const AlgebraFile& af);

// Certificate file: blocks "alpha:" and "beta:", one row per line, row i =
// image of the i-th domain basis vector in codomain coordinates.
struct CertificateFile {
    std::vector<std::vector<Scalar>> alpha_rows, beta_rows;
};
CertificateFile parse_certificate_file(const std::string& text, const Field& f);

// Converts row-per-image blocks into column-action linear maps, validating
// shapes against the two pairs.
Certificate certificate_from_file(const CertificateFile& cf, const Field& f,
                                  size_t alpha_dom, size_t alpha_cod, size_t beta_dom,
                                  size_t beta_cod, CertMode mode);

// Factor-set data file:
//   field Q | field GF <p>
//   base dim <k>     / quotient dim <d>
//   base [i,j] = ... / quotient [i,j] = ...
//   f [x,y] = <combo in base coordinates>
//   L <x>  (followed by k rows of k entries)   / R <x>
//   convention right|left
FactorSetData parse_factorset_file(const std::string& text);
std::string serialize_factorset_file(const FactorSetData& d);

// Single block "eta:" with row-per-image lines.
LinearMap parse_eta_file(const std::string& text, const Field& f, size_t dom, size_t cod);

std::string scalar_token(const Scalar& s);

}  // namespace lzb

#endif
