#include "linalg.hpp"

#include <algorithm>
#include <sstream>

namespace lzb {

bool Vector::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector Vector::operator+(const Vector& o) const {
    if (field != o.field) throw FieldMismatch();
    if (size() != o.size()) throw DimensionMismatch();
    Vector r(field, size());
    for (size_t i = 0; i < size(); ++i) r[i] = e[i] + o[i];
    return r;
}

Vector Vector::operator-(const Vector& o) const {
    if (field != o.field) throw FieldMismatch();
    if (size() != o.size()) throw DimensionMismatch();
    Vector r(field, size());
    for (size_t i = 0; i < size(); ++i) r[i] = e[i] - o[i];
    return r;
}

Vector Vector::scaled(const Scalar& c) const {
    Vector r(field, size());
    for (size_t i = 0; i < size(); ++i) r[i] = e[i] * c;
    return r;
}

Matrix Matrix::identity(const Field& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vector>& rows, size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Vector Matrix::row(size_t i) const {
    Vector v(field_, cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void Matrix::set_row(size_t i, const Vector& v) {
    if (v.size() != cols_) throw DimensionMismatch();
    for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::transposed() const {
    Matrix t(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatch();
    if (cols_ != o.rows_) throw DimensionMismatch();
    Matrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

Vector Matrix::apply(const Vector& x) const {
    if (field_ != x.field) throw FieldMismatch();
    if (x.size() != cols_) throw DimensionMismatch();
    Vector y(field_, rows_);
    for (size_t j = 0; j < cols_; ++j) {
        if (x[j].is_zero()) continue;
        for (size_t i = 0; i < rows_; ++i) y[i] = y[i] + at(i, j) * x[j];
    }
    return y;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

int Matrix::compare(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_) return x.rows_ < y.rows_ ? -1 : 1;
    if (x.cols_ != y.cols_) return x.cols_ < y.cols_ ? -1 : 1;
    for (size_t i = 0; i < x.a_.size(); ++i) {
        int c = Scalar::compare(x.a_[i], y.a_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j).str();
        }
        os << '\n';
    }
    return os.str();
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        size_t sel = row;
        while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != row)
            for (size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(row, j));
        Scalar inv = r.at(row, col).inverse();
        for (size_t j = col; j < r.cols(); ++j) r.at(row, j) = r.at(row, j) * inv;
        for (size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            Scalar factor = r.at(i, col);
            for (size_t j = col; j < r.cols(); ++j)
                r.at(i, j) = r.at(i, j) - factor * r.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

SolveResult solve(const Matrix& a, const Vector& b) {
    if (a.field() != b.field) throw FieldMismatch();
    if (a.rows() != b.size()) throw DimensionMismatch("solve: a.rows != |b|");
    const size_t n = a.cols();
    Matrix aug(a.field(), a.rows(), n + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    auto [r, pivots] = rref(aug);

    SolveResult out;
    if (!pivots.empty() && pivots.back() == n) return out;  // 0 = 1 row
    out.solvable = true;

    std::vector<long long> pivot_of_col(n, -1);
    for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = static_cast<long long>(i);

    out.particular = Vector(a.field(), n);
    for (size_t i = 0; i < pivots.size(); ++i) out.particular[pivots[i]] = r.at(i, n);

    std::vector<Vector> kernel_rows;
    for (size_t j = 0; j < n; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        Vector k(a.field(), n);
        k[j] = Scalar::one(a.field());
        for (size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -r.at(i, j);
        kernel_rows.push_back(std::move(k));
    }
    out.kernel_basis = rref(Matrix::from_rows(a.field(), kernel_rows, n)).r;
    return out;
}

Subspace Subspace::zero(const Field& f, size_t ambient) {
    Subspace s;
    s.field_ = f;
    s.ambient_ = ambient;
    s.basis_ = Matrix(f, 0, ambient);
    return s;
}

Subspace Subspace::full(const Field& f, size_t ambient) {
    return from_rows(Matrix::identity(f, ambient));
}

Subspace Subspace::from_rows(const Matrix& rows) {
    auto [r, pivots] = rref(rows);
    Subspace s;
    s.field_ = rows.field();
    s.ambient_ = rows.cols();
    s.pivots_ = pivots;
    s.basis_ = Matrix(rows.field(), pivots.size(), rows.cols());
    for (size_t i = 0; i < pivots.size(); ++i)
        for (size_t j = 0; j < rows.cols(); ++j) s.basis_.at(i, j) = r.at(i, j);
    return s;
}

Subspace Subspace::from_vectors(const Field& f, size_t ambient, const std::vector<Vector>& gens) {
    return from_rows(Matrix::from_rows(f, gens, ambient));
}

std::optional<Vector> Subspace::coords_of(const Vector& v) const {
    if (v.field != field_) throw FieldMismatch();
    if (v.size() != ambient_) throw AmbientMismatch();
    Vector rem = v;
    Vector coords(field_, dim());
    for (size_t i = 0; i < dim(); ++i) {
        Scalar c = rem[pivots_[i]];  // by value: the loop below clears this slot
        if (c.is_zero()) continue;
        coords[i] = c;
        for (size_t j = 0; j < ambient_; ++j) rem[j] = rem[j] - c * basis_.at(i, j);
    }
    if (!rem.is_zero()) return std::nullopt;
    return coords;
}

bool Subspace::contains(const Vector& v) const { return coords_of(v).has_value(); }

bool Subspace::contains(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw AmbientMismatch();
    for (size_t i = 0; i < o.dim(); ++i)
        if (!contains(o.basis_row(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.field_ != b.field_) throw FieldMismatch();
    if (a.ambient_ != b.ambient_) throw AmbientMismatch();
    Matrix stacked(a.field_, a.dim() + b.dim(), a.ambient_);
    for (size_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis_row(i));
    for (size_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis_row(i));
    return Subspace::from_rows(stacked);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.field_ != b.field_) throw FieldMismatch();
    if (a.ambient_ != b.ambient_) throw AmbientMismatch();
    const size_t r = a.dim(), s = b.dim(), n = a.ambient_;
    // x^T A = y^T B  <=>  [A^T | -B^T] (x;y) = 0
    Matrix sys(a.field_, n, r + s);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < n; ++j) sys.at(j, i) = a.basis_.at(i, j);
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < n; ++j) sys.at(j, r + i) = -b.basis_.at(i, j);
    SolveResult sol = solve(sys, Vector(a.field_, n));
    std::vector<Vector> gens;
    for (size_t k = 0; k < sol.kernel_basis.rows(); ++k) {
        Vector xy = sol.kernel_basis.row(k);
        Vector v(a.field_, n);
        for (size_t i = 0; i < r; ++i)
            if (!xy[i].is_zero())
                for (size_t j = 0; j < n; ++j) v[j] = v[j] + xy[i] * a.basis_.at(i, j);
        gens.push_back(std::move(v));
    }
    return Subspace::from_vectors(a.field_, n, gens);
}

Matrix complement_rows(const Subspace& inner, const Subspace& outer) {
    if (inner.field() != outer.field()) throw FieldMismatch();
    if (inner.ambient() != outer.ambient()) throw AmbientMismatch();
    if (!outer.contains(inner)) throw NotContained();
    std::vector<Vector> rows;
    for (size_t i = 0; i < outer.dim(); ++i) {
        size_t p = outer.pivots()[i];
        bool taken = std::find(inner.pivots().begin(), inner.pivots().end(), p) != inner.pivots().end();
        if (!taken) rows.push_back(outer.basis_row(i));
    }
    return Matrix::from_rows(outer.field(), rows, outer.ambient());
}

Subspace complement(const Subspace& inner, const Subspace& outer) {
    return Subspace::from_rows(complement_rows(inner, outer));
}

LinearMap LinearMap::identity(const Field& f, size_t n) {
    return {n, n, Matrix::identity(f, n)};
}

LinearMap LinearMap::from_matrix(Matrix m) {
    LinearMap l;
    l.domain_dim = m.cols();
    l.codomain_dim = m.rows();
    l.mat = std::move(m);
    return l;
}

LinearMap LinearMap::from_images(const Field& f, const std::vector<Vector>& rows, size_t codomain_dim) {
    Matrix m(f, codomain_dim, rows.size());
    for (size_t j = 0; j < rows.size(); ++j) {
        if (rows[j].size() != codomain_dim) throw DimensionMismatch();
        for (size_t i = 0; i < codomain_dim; ++i) m.at(i, j) = rows[j][i];
    }
    return from_matrix(std::move(m));
}

Vector LinearMap::image_of_basis(size_t i) const {
    Vector v(mat.field(), codomain_dim);
    for (size_t r = 0; r < codomain_dim; ++r) v[r] = mat.at(r, i);
    return v;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    if (inner.codomain_dim != domain_dim) throw DimensionMismatch();
    return from_matrix(mat * inner.mat);
}

size_t LinearMap::rank() const { return rref(mat).pivots.size(); }

bool LinearMap::is_invertible() const {
    return domain_dim == codomain_dim && rank() == domain_dim;
}

LinearMap LinearMap::inverse() const {
    if (domain_dim != codomain_dim) throw DimensionMismatch();
    const size_t n = domain_dim;
    Matrix aug(mat.field(), n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = mat.at(i, j);
        aug.at(i, n + i) = Scalar::one(mat.field());
    }
    auto [r, pivots] = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw Error("matrix is not invertible");
    Matrix inv(mat.field(), n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return from_matrix(std::move(inv));
}

void enumerate_subspaces(const Field& f, size_t n,
                         const std::function<bool(const Subspace&)>& visit) {
    if (f.is_rationals()) throw Error("subspace enumeration needs a finite field");
    if (!visit(Subspace::zero(f, n))) return;

    std::vector<size_t> pivots;
    // iterate over all nonempty pivot-column subsets, in (k, lex) order
    for (size_t k = 1; k <= n; ++k) {
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            // free positions of the RREF shape for this pivot set
            std::vector<std::pair<size_t, size_t>> free_pos;
            for (size_t i = 0; i < k; ++i)
                for (size_t j = idx[i] + 1; j < n; ++j)
                    if (std::find(idx.begin(), idx.end(), j) == idx.end())
                        free_pos.emplace_back(i, j);
            std::vector<uint64_t> assign(free_pos.size(), 0);
            while (true) {
                Matrix m(f, k, n);
                for (size_t i = 0; i < k; ++i) m.at(i, idx[i]) = Scalar::one(f);
                for (size_t t = 0; t < free_pos.size(); ++t)
                    m.at(free_pos[t].first, free_pos[t].second) = Scalar::residue(f, assign[t]);
                Subspace s = Subspace::from_rows(m);
                if (!visit(s)) return;
                // odometer
                size_t t = 0;
                for (; t < assign.size(); ++t) {
                    if (++assign[t] < f.p) break;
                    assign[t] = 0;
                }
                if (t == assign.size()) break;
            }
            // next combination
            size_t i = k;
            while (i-- > 0) {
                if (idx[i] + (k - i) < n) {
                    ++idx[i];
                    for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = SIZE_MAX;
                    break;
                }
            }
            if (i == SIZE_MAX) break;
        }
    }
}

std::string default_name(size_t i) { return "e" + std::to_string(i + 1); }

std::string combo_str(const Vector& v, const std::vector<std::string>& names, bool compact) {
    std::ostringstream os;
    bool first = true;
    const std::string plus = compact ? "+" : " + ";
    const std::string minus = compact ? "-" : " - ";
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string name = i < names.size() && !names[i].empty() ? names[i] : default_name(i);
        Scalar c = v[i];
        bool neg = false;
        if (v.field.is_rationals() && Scalar::compare(c, Scalar::zero(v.field)) < 0) {
            neg = true;
            c = -c;
        }
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? minus : plus);
        }
        if (!c.is_one()) os << c.str() << '*';
        os << name;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

std::string Subspace::str(const std::vector<std::string>& names) const {
    std::ostringstream os;
    os << "span{";
    for (size_t i = 0; i < dim(); ++i) {
        if (i) os << ", ";
        os << combo_str(basis_row(i), names);
    }
    os << "}";
    return os.str();
}

}  // namespace lzb
