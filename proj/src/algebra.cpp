#include "algebra.hpp"

namespace lzb {

bool is_validated(LeibnizKind k) {
    return k == LeibnizKind::Right || k == LeibnizKind::Left || k == LeibnizKind::Both;
}

LeibnizAlgebra::LeibnizAlgebra(const Field& f, size_t n)
    : field(f), dim(n), c(n * n * n, Scalar::zero(f)) {
    names.resize(n);
    for (size_t i = 0; i < n; ++i) names[i] = default_name(i);
}

Vector LeibnizAlgebra::bracket_basis(size_t i, size_t j) const {
    Vector v(field, dim);
    for (size_t k = 0; k < dim; ++k) v[k] = cc(i, j, k);
    return v;
}

Vector LeibnizAlgebra::bracket(const Vector& x, const Vector& y) const {
    if (x.field != field || y.field != field) throw FieldMismatch();
    if (x.size() != dim || y.size() != dim) throw DimensionMismatch("bracket: operand length");
    Vector v(field, dim);
    for (size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar w = x[i] * y[j];
            for (size_t k = 0; k < dim; ++k) {
                const Scalar& cijk = cc(i, j, k);
                if (!cijk.is_zero()) v[k] = v[k] + w * cijk;
            }
        }
    }
    return v;
}

std::string LeibnizAlgebra::name_of(size_t i) const {
    return i < names.size() && !names[i].empty() ? names[i] : default_name(i);
}

bool LeibnizAlgebra::tensor_equal(const LeibnizAlgebra& o) const {
    return field == o.field && dim == o.dim && c == o.c;
}

Vector leibniz_residual(const LeibnizAlgebra& alg, LeibnizKind which, size_t i, size_t j, size_t k) {
    Vector ei(alg.field, alg.dim), ej(alg.field, alg.dim), ek(alg.field, alg.dim);
    ei[i] = Scalar::one(alg.field);
    ej[j] = Scalar::one(alg.field);
    ek[k] = Scalar::one(alg.field);
    // lhs = [e_i, [e_j, e_k]]
    Vector l = alg.bracket(ei, alg.bracket_basis(j, k));
    Vector r;
    if (which == LeibnizKind::Right) {
        // [[x,y],z] - [[x,z],y]
        r = alg.bracket(alg.bracket_basis(i, j), ek) - alg.bracket(alg.bracket_basis(i, k), ej);
    } else {
        // [[x,y],z] + [y,[x,z]]
        r = alg.bracket(alg.bracket_basis(i, j), ek) + alg.bracket(ej, alg.bracket_basis(i, k));
    }
    return l - r;
}

namespace {

bool holds_everywhere(const LeibnizAlgebra& alg, LeibnizKind which,
                      LeibnizCounterexample* cex) {
    for (size_t i = 0; i < alg.dim; ++i)
        for (size_t j = 0; j < alg.dim; ++j)
            for (size_t k = 0; k < alg.dim; ++k) {
                Vector res = leibniz_residual(alg, which, i, j, k);
                if (!res.is_zero()) {
                    if (cex) {
                        Vector ei(alg.field, alg.dim);
                        ei[i] = Scalar::one(alg.field);
                        Vector ej(alg.field, alg.dim);
                        ej[j] = Scalar::one(alg.field);
                        Vector ek(alg.field, alg.dim);
                        ek[k] = Scalar::one(alg.field);
                        cex->i = i;
                        cex->j = j;
                        cex->k = k;
                        cex->lhs = alg.bracket(ei, alg.bracket_basis(j, k));
                        cex->rhs = cex->lhs - res;
                    }
                    return false;
                }
            }
    return true;
}

}  // namespace

LeibnizCheck check_leibniz(LeibnizAlgebra& alg) {
    LeibnizCheck out;
    LeibnizCounterexample right_cex;
    bool right = holds_everywhere(alg, LeibnizKind::Right, &right_cex);
    bool left = holds_everywhere(alg, LeibnizKind::Left, nullptr);
    if (right && left)
        out.kind = LeibnizKind::Both;
    else if (right)
        out.kind = LeibnizKind::Right;
    else if (left)
        out.kind = LeibnizKind::Left;
    else {
        out.kind = LeibnizKind::NotLeibniz;
        out.counterexample = right_cex;  // report against the printed identity
    }
    alg.kind = out.kind;
    return out;
}

void require_validated(const LeibnizAlgebra& alg) {
    if (!is_validated(alg.kind)) throw NotValidated();
}

bool is_two_sided_ideal(const LeibnizAlgebra& alg, const Subspace& s) {
    if (s.ambient() != alg.dim) throw AmbientMismatch();
    for (size_t r = 0; r < s.dim(); ++r) {
        Vector v = s.basis_row(r);
        for (size_t j = 0; j < alg.dim; ++j) {
            Vector ej(alg.field, alg.dim);
            ej[j] = Scalar::one(alg.field);
            if (!s.contains(alg.bracket(v, ej))) return false;
            if (!s.contains(alg.bracket(ej, v))) return false;
        }
    }
    return true;
}

IdealHandle make_ideal(const LeibnizAlgebra& alg, const Subspace& s) {
    if (!is_two_sided_ideal(alg, s)) throw NotAnIdeal();
    return IdealHandle{s};
}

IdealHandle ideal_closure(const LeibnizAlgebra& alg, const Subspace& s) {
    Subspace cur = s;
    for (;;) {
        std::vector<Vector> gens;
        for (size_t r = 0; r < cur.dim(); ++r) gens.push_back(cur.basis_row(r));
        size_t before = cur.dim();
        for (size_t r = 0; r < cur.dim(); ++r) {
            Vector v = cur.basis_row(r);
            for (size_t j = 0; j < alg.dim; ++j) {
                Vector ej(alg.field, alg.dim);
                ej[j] = Scalar::one(alg.field);
                gens.push_back(alg.bracket(v, ej));
                gens.push_back(alg.bracket(ej, v));
            }
        }
        cur = Subspace::from_vectors(alg.field, alg.dim, gens);
        if (cur.dim() == before) break;
    }
    return IdealHandle{cur};
}

QuotientResult quotient(const LeibnizAlgebra& alg, const IdealHandle& n) {
    require_validated(alg);
    const Subspace& ns = n.space;
    Matrix comp = complement_rows(ns, Subspace::full(alg.field, alg.dim));
    const size_t d = comp.rows();

    // projection: solve x = n-part + sum t_i comp_i for each basis vector
    Matrix sys(alg.field, alg.dim, d + ns.dim());
    for (size_t i = 0; i < d; ++i)
        for (size_t r = 0; r < alg.dim; ++r) sys.at(r, i) = comp.at(i, r);
    for (size_t i = 0; i < ns.dim(); ++i)
        for (size_t r = 0; r < alg.dim; ++r) sys.at(r, d + i) = ns.basis().at(i, r);

    auto project = [&](const Vector& x) {
        SolveResult sol = solve(sys, x);
        if (!sol.solvable) throw Error("internal: quotient projection failed");
        Vector t(alg.field, d);
        for (size_t i = 0; i < d; ++i) t[i] = sol.particular[i];
        return t;
    };

    QuotientResult out;
    out.alg = LeibnizAlgebra(alg.field, d);
    for (size_t i = 0; i < d; ++i) {
        // inherit the parent's label when the basis row is a standard vector
        Vector row = comp.row(i);
        size_t nz = 0, pos = 0;
        for (size_t r = 0; r < alg.dim; ++r)
            if (!row[r].is_zero()) {
                ++nz;
                pos = r;
            }
        out.alg.names[i] = (nz == 1 && row[pos].is_one()) ? alg.name_of(pos) : default_name(i);
    }
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            Vector b = alg.bracket(comp.row(i), comp.row(j));
            Vector t = project(b);
            for (size_t k = 0; k < d; ++k) out.alg.cc(i, j, k) = t[k];
        }

    Matrix proj(alg.field, d, alg.dim);
    for (size_t col = 0; col < alg.dim; ++col) {
        Vector ecol(alg.field, alg.dim);
        ecol[col] = Scalar::one(alg.field);
        Vector t = project(ecol);
        for (size_t r = 0; r < d; ++r) proj.at(r, col) = t[r];
    }
    out.projection = LinearMap::from_matrix(std::move(proj));

    Matrix sect(alg.field, alg.dim, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t r = 0; r < alg.dim; ++r) sect.at(r, i) = comp.at(i, r);
    out.section = LinearMap::from_matrix(std::move(sect));

    // quotients of Leibniz algebras are Leibniz; stamp and double-check
    LeibnizCheck chk = check_leibniz(out.alg);
    if (!chk.ok()) throw LeibnizCheckFailed("internal: quotient failed the Leibniz check");
    return out;
}

HomCheck hom_check(const LinearMap& phi, const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    if (phi.domain_dim != a.dim || phi.codomain_dim != b.dim)
        throw DimensionMismatch("hom_check: map shape");
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) {
            Vector lhs = phi.apply(a.bracket_basis(i, j));
            Vector rhs = b.bracket(phi.image_of_basis(i), phi.image_of_basis(j));
            if (lhs != rhs) return {false, i, j};
        }
    return {};
}

Subspace squares_span(const LeibnizAlgebra& alg) {
    std::vector<Vector> gens;
    for (size_t i = 0; i < alg.dim; ++i) gens.push_back(alg.bracket_basis(i, i));
    for (size_t i = 0; i < alg.dim; ++i)
        for (size_t j = i + 1; j < alg.dim; ++j)
            gens.push_back(alg.bracket_basis(i, j) + alg.bracket_basis(j, i));
    return Subspace::from_vectors(alg.field, alg.dim, gens);
}

LiezationResult liezation(const LeibnizAlgebra& alg) {
    require_validated(alg);
    IdealHandle leib = ideal_closure(alg, squares_span(alg));
    QuotientResult q = quotient(alg, leib);
    // antisymmetry sanity: [x,x] = 0 on the quotient basis
    for (size_t i = 0; i < q.alg.dim; ++i)
        if (!q.alg.bracket_basis(i, i).is_zero())
            throw Error("internal: liezation quotient is not alternating");
    return {std::move(q.alg), std::move(q.projection)};
}

SubalgebraResult subalgebra_on(const LeibnizAlgebra& alg, const Subspace& s) {
    const size_t d = s.dim();
    SubalgebraResult out;
    out.alg = LeibnizAlgebra(alg.field, d);
    for (size_t i = 0; i < d; ++i) {
        Vector row = s.basis_row(i);
        size_t nz = 0, pos = 0;
        for (size_t r = 0; r < alg.dim; ++r)
            if (!row[r].is_zero()) {
                ++nz;
                pos = r;
            }
        out.alg.names[i] = (nz == 1 && row[pos].is_one()) ? alg.name_of(pos) : default_name(i);
    }
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            Vector b = alg.bracket(s.basis_row(i), s.basis_row(j));
            auto t = s.coords_of(b);
            if (!t) throw NotAnIdeal("subspace is not closed under the bracket");
            for (size_t k = 0; k < d; ++k) out.alg.cc(i, j, k) = (*t)[k];
        }
    Matrix inc(alg.field, alg.dim, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t r = 0; r < alg.dim; ++r) inc.at(r, i) = s.basis().at(i, r);
    out.inclusion = LinearMap::from_matrix(std::move(inc));
    if (is_validated(alg.kind)) {
        LeibnizCheck chk = check_leibniz(out.alg);
        if (!chk.ok()) throw LeibnizCheckFailed("internal: subalgebra failed the Leibniz check");
    }
    return out;
}

RebaseResult rebase(const LeibnizAlgebra& alg, const Matrix& rows) {
    if (rows.rows() != alg.dim || rows.cols() != alg.dim)
        throw DimensionMismatch("rebase: basis matrix shape");
    LinearMap to_orig = LinearMap::from_matrix(rows.transposed());
    if (!to_orig.is_invertible()) throw Error("rebase: basis matrix is singular");
    LinearMap from_orig = to_orig.inverse();

    RebaseResult out;
    out.alg = LeibnizAlgebra(alg.field, alg.dim);
    for (size_t i = 0; i < alg.dim; ++i)
        for (size_t j = 0; j < alg.dim; ++j) {
            Vector b = alg.bracket(rows.row(i), rows.row(j));
            Vector t = from_orig.apply(b);
            for (size_t k = 0; k < alg.dim; ++k) out.alg.cc(i, j, k) = t[k];
        }
    out.alg.kind = alg.kind;
    out.to_original = to_orig;
    return out;
}

Subspace pull_subspace(const Subspace& s, const LinearMap& to_original) {
    LinearMap from_orig = to_original.inverse();
    std::vector<Vector> gens;
    for (size_t i = 0; i < s.dim(); ++i) gens.push_back(from_orig.apply(s.basis_row(i)));
    return Subspace::from_vectors(s.field(), to_original.domain_dim, gens);
}

}  // namespace lzb
