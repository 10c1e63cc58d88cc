#include "pairs.hpp"

namespace lzb {

namespace {

Vector basis_vec(const Field& f, size_t n, size_t i) {
    Vector v(f, n);
    v[i] = Scalar::one(f);
    return v;
}

bool vectors_parallel(const Vector& u, const Vector& v) {
    for (size_t k = 0; k < u.size(); ++k)
        for (size_t l = k + 1; l < u.size(); ++l)
            if (!(u[k] * v[l] - u[l] * v[k]).is_zero()) return false;
    return true;
}

}  // namespace

Subspace lie_center(const LeibnizAlgebra& q, const Subspace& m) {
    require_validated(q);
    const size_t n = q.dim;
    // condition on z: for every j,k:  sum_i z_i (c[i][j][k] + c[j][i][k]) = 0
    Matrix sys(q.field, n * n, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
            for (size_t i = 0; i < n; ++i)
                sys.at(j * n + k, i) = q.cc(i, j, k) + q.cc(j, i, k);
    SolveResult sol = solve(sys, Vector(q.field, n * n));
    Subspace z_q = Subspace::from_rows(sol.kernel_basis);
    return subspace_intersect(z_q, m);
}

IdealHandle lie_commutator(const LeibnizAlgebra& q, const Subspace& m) {
    require_validated(q);
    std::vector<Vector> gens;
    for (size_t r = 0; r < m.dim(); ++r) {
        Vector x = m.basis_row(r);
        for (size_t j = 0; j < q.dim; ++j) {
            Vector ej = basis_vec(q.field, q.dim, j);
            gens.push_back(q.bracket(x, ej) + q.bracket(ej, x));
        }
    }
    Subspace span = Subspace::from_vectors(q.field, q.dim, gens);
    return ideal_closure(q, span);
}

Pair make_pair(const LeibnizAlgebra& q, const Subspace& m) {
    require_validated(q);
    Pair p;
    p.q = q;
    p.m = make_ideal(q, m);
    p.z_lie = lie_center(q, m);
    p.k_lie = lie_commutator(q, m);
    return p;
}

Pair make_full_pair(const LeibnizAlgebra& q) {
    return make_pair(q, Subspace::full(q.field, q.dim));
}

bool is_stem(const Pair& p) { return p.k_lie.space.contains(p.z_lie); }

Subspace two_sided_center(const LeibnizAlgebra& q) {
    const size_t n = q.dim;
    Matrix sys(q.field, 2 * n * n, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
            for (size_t i = 0; i < n; ++i) {
                sys.at(j * n + k, i) = q.cc(i, j, k);          // [z, e_j] = 0
                sys.at(n * n + j * n + k, i) = q.cc(j, i, k);  // [e_j, z] = 0
            }
    SolveResult sol = solve(sys, Vector(q.field, 2 * n * n));
    return Subspace::from_rows(sol.kernel_basis);
}

namespace {

EpsilonReport epsilon_basis_pairs(const LeibnizAlgebra& alg, const Subspace& s) {
    EpsilonReport rep;
    rep.mode = EpsilonMode::BasisPairs;
    rep.pass = true;
    for (size_t i = 0; i < s.dim() && rep.pass; ++i)
        for (size_t j = i; j < s.dim() && rep.pass; ++j) {
            Vector u = s.basis_row(i), v = s.basis_row(j);
            Vector uv = alg.bracket(u, v), vu = alg.bracket(v, u);
            bool uz = uv.is_zero(), vz = vu.is_zero();
            if (uz && vz) continue;
            if (uz != vz || !vectors_parallel(uv, vu)) {
                rep.pass = false;
                rep.witness = EpsilonWitness{u, v, uv, vu};
                break;
            }
            size_t k = 0;
            while (vu[k].is_zero()) ++k;
            rep.entries.push_back({i, j, uv[k] / vu[k]});
        }
    return rep;
}

EpsilonReport epsilon_all_elements(const LeibnizAlgebra& alg, const Subspace& s) {
    EpsilonReport rep;
    rep.mode = EpsilonMode::AllElements;
    const size_t m = s.dim(), n = alg.dim;

    // D[a][c] = [u_a, u_c] for the restriction basis u
    std::vector<std::vector<Vector>> D(m, std::vector<Vector>(m));
    for (size_t a = 0; a < m; ++a)
        for (size_t c = 0; c < m; ++c) D[a][c] = alg.bracket(s.basis_row(a), s.basis_row(c));

    // every 2x2 minor of (B(x,y) | B(y,x)) must vanish identically; expand
    // the minor polynomial coefficient at the monomial s_a s_a' t_c t_c'
    bool identity = true;
    size_t bad_k = 0, bad_l = 0;
    for (size_t k = 0; k < n && identity; ++k)
        for (size_t l = k + 1; l < n && identity; ++l)
            for (size_t a = 0; a < m && identity; ++a)
                for (size_t ap = a; ap < m && identity; ++ap)
                    for (size_t c = 0; c < m && identity; ++c)
                        for (size_t cp = c; cp < m; ++cp) {
                            Scalar coeff = Scalar::zero(alg.field);
                            auto add = [&](size_t i1, size_t j1, size_t i2, size_t j2) {
                                // term x_{i1} y_{j1} from B(x,y), y_{j2} x_{i2} from B(y,x)
                                coeff = coeff + D[i1][j1][k] * D[j2][i2][l] -
                                        D[i1][j1][l] * D[j2][i2][k];
                            };
                            add(a, c, ap, cp);
                            if (c != cp) add(a, cp, ap, c);
                            if (a != ap) add(ap, c, a, cp);
                            if (a != ap && c != cp) add(ap, cp, a, c);
                            if (!coeff.is_zero()) {
                                identity = false;
                                bad_k = k;
                                bad_l = l;
                                break;
                            }
                        }
    rep.pass = identity;
    if (identity) return rep;

    rep.detail = "minor (" + std::to_string(bad_k + 1) + "," + std::to_string(bad_l + 1) +
                 ") of (B(x,y)|B(y,x)) is not identically zero";

    // deterministic hunt for a concrete witness pair inside the subspace
    std::vector<Vector> cands;
    for (size_t i = 0; i < m; ++i) cands.push_back(s.basis_row(i));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) cands.push_back(s.basis_row(i) + s.basis_row(j));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) cands.push_back(s.basis_row(i) - s.basis_row(j));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k2 = j + 1; k2 < m; ++k2)
                cands.push_back(s.basis_row(i) + s.basis_row(j) + s.basis_row(k2));
    for (const Vector& x : cands)
        for (const Vector& y : cands) {
            Vector xy = alg.bracket(x, y), yx = alg.bracket(y, x);
            if (xy.is_zero() && yx.is_zero()) continue;
            if ((xy.is_zero() != yx.is_zero()) || !vectors_parallel(xy, yx)) {
                rep.witness = EpsilonWitness{x, y, xy, yx};
                return rep;
            }
        }
    return rep;
}

}  // namespace

EpsilonReport epsilon_condition(const LeibnizAlgebra& alg, const Subspace& restrict_to,
                                EpsilonMode mode) {
    require_validated(alg);
    if (restrict_to.ambient() != alg.dim) throw AmbientMismatch();
    return mode == EpsilonMode::BasisPairs ? epsilon_basis_pairs(alg, restrict_to)
                                           : epsilon_all_elements(alg, restrict_to);
}

}  // namespace lzb
