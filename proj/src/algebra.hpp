#ifndef LZB_ALGEBRA_HPP
#define LZB_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace lzb {

// Which Leibniz identity a structure tensor satisfies.  The low-dimensional
// classifications in the literature are split between the two conventions
// (right: [x,[y,z]] = [[x,y],z] - [[x,z],y]; left: [x,[y,z]] = [[x,y],z] +
// [y,[x,z]]), and the catalog reproduces tables from both, so validation
// records which identity holds and the factor-set machinery dispatches on it.
enum class LeibnizKind { Unchecked, Right, Left, Both, NotLeibniz };

bool is_validated(LeibnizKind k);

// Finite-dimensional algebra given by its structure tensor:
// [e_i, e_j] = sum_k c[i][j][k] e_k.
struct LeibnizAlgebra {
    Field field = Field::rationals();
    size_t dim = 0;
    std::vector<Scalar> c;            // dim^3, index (i*dim + j)*dim + k
    std::vector<std::string> names;   // basis labels, size dim
    LeibnizKind kind = LeibnizKind::Unchecked;

    LeibnizAlgebra() = default;
    LeibnizAlgebra(const Field& f, size_t n);

    const Scalar& cc(size_t i, size_t j, size_t k) const { return c[(i * dim + j) * dim + k]; }
    Scalar& cc(size_t i, size_t j, size_t k) { return c[(i * dim + j) * dim + k]; }

    Vector bracket_basis(size_t i, size_t j) const;  // [e_i, e_j]
    Vector bracket(const Vector& x, const Vector& y) const;

    std::string name_of(size_t i) const;
    bool tensor_equal(const LeibnizAlgebra& o) const;
};

struct LeibnizCounterexample {
    size_t i, j, k;   // 0-based basis triple (x, y, z)
    Vector lhs, rhs;  // sides of the right-convention identity at that triple
};

struct LeibnizCheck {
    LeibnizKind kind = LeibnizKind::NotLeibniz;
    std::optional<LeibnizCounterexample> counterexample;  // set when NotLeibniz
    bool ok() const { return kind != LeibnizKind::NotLeibniz; }
};

// Checks the identity on all dim^3 basis triples (sufficient by
// trilinearity), right convention first, then left.  Also stamps alg.kind.
LeibnizCheck check_leibniz(LeibnizAlgebra& alg);

// Residual of one identity at one basis triple; zero iff the identity holds
// there.  Exposed for targeted diagnostics.
Vector leibniz_residual(const LeibnizAlgebra& alg, LeibnizKind which, size_t i, size_t j, size_t k);

void require_validated(const LeibnizAlgebra& alg);

// A subspace verified to satisfy [s, q] <= s and [q, s] <= s.
struct IdealHandle {
    Subspace space;
};

bool is_two_sided_ideal(const LeibnizAlgebra& alg, const Subspace& s);
IdealHandle make_ideal(const LeibnizAlgebra& alg, const Subspace& s);  // throws NotAnIdeal

// Smallest two-sided ideal containing s: repeated span extension until fixed.
IdealHandle ideal_closure(const LeibnizAlgebra& alg, const Subspace& s);

struct QuotientResult {
    LeibnizAlgebra alg;      // on the deterministic complement basis
    LinearMap projection;    // parent coords -> quotient coords
    LinearMap section;       // quotient coords -> parent coords
};

// Quotient by a two-sided ideal, on the deterministic complement basis.
QuotientResult quotient(const LeibnizAlgebra& alg, const IdealHandle& n);

struct HomCheck {
    bool ok = true;
    size_t i = 0, j = 0;  // first failing basis pair when !ok
};

// phi(bracket_a(e_i,e_j)) == bracket_b(phi e_i, phi e_j) on all basis pairs.
HomCheck hom_check(const LinearMap& phi, const LeibnizAlgebra& a, const LeibnizAlgebra& b);

struct LiezationResult {
    LeibnizAlgebra lie;
    LinearMap projection;
};

// Largest Lie quotient: q / <ideal generated by all squares [x,x]>.
LiezationResult liezation(const LeibnizAlgebra& alg);

// Span of all squares [x,x]; equals span{[e_i,e_i]} + span{[e_i,e_j]+[e_j,e_i]}.
Subspace squares_span(const LeibnizAlgebra& alg);

struct SubalgebraResult {
    LeibnizAlgebra alg;      // on s's RREF basis
    LinearMap inclusion;     // subalgebra coords -> parent coords
};

// The algebra structure induced on a bracket-closed subspace.
SubalgebraResult subalgebra_on(const LeibnizAlgebra& alg, const Subspace& s);

struct RebaseResult {
    LeibnizAlgebra alg;        // same algebra written on the new basis
    LinearMap to_original;     // new coords -> old coords (an isomorphism)
};

// Re-express the algebra on a new basis; rows[i] = new basis vector in old
// coordinates.  rows must be invertible.
RebaseResult rebase(const LeibnizAlgebra& alg, const Matrix& rows);

// Map a subspace of the original algebra into rebased coordinates.
Subspace pull_subspace(const Subspace& s, const LinearMap& to_original);

}  // namespace lzb

#endif
