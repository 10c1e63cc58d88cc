#ifndef LZB_LINALG_HPP
#define LZB_LINALG_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace lzb {

struct Vector {
    Field field = Field::rationals();
    std::vector<Scalar> e;

    Vector() = default;
    Vector(const Field& f, size_t n) : field(f), e(n, Scalar::zero(f)) {}

    size_t size() const { return e.size(); }
    Scalar& operator[](size_t i) { return e[i]; }
    const Scalar& operator[](size_t i) const { return e[i]; }
    bool is_zero() const;

    Vector operator+(const Vector& o) const;
    Vector operator-(const Vector& o) const;
    Vector scaled(const Scalar& c) const;
    bool operator==(const Vector& o) const { return field == o.field && e == o.e; }
    bool operator!=(const Vector& o) const { return !(*this == o); }
};

class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, size_t rows, size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const Field& f, size_t n);
    static Matrix from_rows(const Field& f, const std::vector<Vector>& rows, size_t cols);

    const Field& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Vector row(size_t i) const;
    void set_row(size_t i, const Vector& v);
    Matrix transposed() const;

    Matrix operator*(const Matrix& o) const;
    Vector apply(const Vector& x) const;  // column action: y = M x

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    // Total order for deterministic tie-breaks: shape first, then entries
    // row-major under Scalar::compare.
    static int compare(const Matrix& x, const Matrix& y);

    std::string str() const;

private:
    Field field_ = Field::rationals();
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Matrix r;
    std::vector<size_t> pivots;
};

// Unique reduced row echelon form; rank = pivots.size().
RrefResult rref(const Matrix& m);

struct SolveResult {
    bool solvable = false;
    Vector particular;     // free variables set to zero
    Matrix kernel_basis;   // rows span the homogeneous solutions (RREF)
};

// Exact solution of a x = b.
SolveResult solve(const Matrix& a, const Vector& b);

// Row space of a matrix, stored canonically as an RREF basis.  Two subspaces
// are equal as sets iff their representations are identical.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(const Field& f, size_t ambient);
    static Subspace full(const Field& f, size_t ambient);
    static Subspace from_rows(const Matrix& rows);
    static Subspace from_vectors(const Field& f, size_t ambient, const std::vector<Vector>& gens);

    const Field& field() const { return field_; }
    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }
    Vector basis_row(size_t i) const { return basis_.row(i); }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& o) const;
    // Coordinates of v in the stored basis; nullopt if v is outside.
    std::optional<Vector> coords_of(const Vector& v) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    friend Subspace subspace_sum(const Subspace& a, const Subspace& b);
    friend Subspace subspace_intersect(const Subspace& a, const Subspace& b);

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    Field field_ = Field::rationals();
    size_t ambient_ = 0;
    Matrix basis_;  // RREF, no zero rows
    std::vector<size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// Deterministic complement of inner in outer: the span of those RREF basis
// rows of outer whose pivot column is not a pivot column of inner.  Throws
// NotContained unless inner <= outer.
Subspace complement(const Subspace& inner, const Subspace& outer);

// Rows of the deterministic complement, kept in outer's row order (used as
// quotient/section bases; the rows are RREF as they stand).
Matrix complement_rows(const Subspace& inner, const Subspace& outer);

struct LinearMap {
    size_t domain_dim = 0, codomain_dim = 0;
    Matrix mat;  // codomain_dim x domain_dim, y = mat * x

    static LinearMap identity(const Field& f, size_t n);
    static LinearMap from_matrix(Matrix m);
    // rows[i] = image of i-th domain basis vector, in codomain coordinates
    static LinearMap from_images(const Field& f, const std::vector<Vector>& rows, size_t codomain_dim);

    Vector apply(const Vector& x) const { return mat.apply(x); }
    Vector image_of_basis(size_t i) const;
    LinearMap compose(const LinearMap& inner) const;  // this after inner
    bool is_invertible() const;
    LinearMap inverse() const;
    size_t rank() const;
};

// All k-dimensional subspaces of GF(p)^n, via RREF enumeration; callback
// returns false to stop.  Only prime fields.
void enumerate_subspaces(const Field& f, size_t n,
                         const std::function<bool(const Subspace&)>& visit);

// Linear combination pretty-printer: "a1 - 2*a3" style.
std::string combo_str(const Vector& v, const std::vector<std::string>& names, bool compact = false);

std::string default_name(size_t i);  // "e1", "e2", ...

}  // namespace lzb

#endif
