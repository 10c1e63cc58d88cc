#include "isoclinism.hpp"

#include <algorithm>

namespace lzb {

namespace {

Vector basis_vec(const Field& f, size_t n, size_t i) {
    Vector v(f, n);
    v[i] = Scalar::one(f);
    return v;
}

Vector embed_in(const Subspace& s, const Vector& coords) {
    Vector out(s.field(), s.ambient());
    for (size_t i = 0; i < s.dim(); ++i)
        if (!coords[i].is_zero()) out = out + s.basis_row(i).scaled(coords[i]);
    return out;
}

}  // namespace

CentralQuotient central_quotient(const Pair& p) {
    CentralQuotient cq;
    cq.qz = quotient(p.q, make_ideal(p.q, p.z_lie));
    std::vector<Vector> rows;
    for (size_t i = 0; i < p.m.space.dim(); ++i)
        rows.push_back(cq.qz.projection.apply(p.m.space.basis_row(i)));
    cq.m_bar = Subspace::from_vectors(p.q.field, cq.qz.alg.dim, rows);
    return cq;
}

namespace {

// C with a precomputed quotient; args in q/Z coordinates, result ambient
Vector commutator_in(const CentralQuotient& cq, const Pair& p, const Vector& mbar,
                     const Vector& qbar) {
    Vector x = cq.qz.section.apply(mbar);
    Vector y = cq.qz.section.apply(qbar);
    return p.q.bracket(x, y) + p.q.bracket(y, x);
}

}  // namespace

Vector commutator_map(const Pair& p, const Vector& mbar, const Vector& qbar) {
    CentralQuotient cq = central_quotient(p);
    if (mbar.size() != cq.qz.alg.dim || qbar.size() != cq.qz.alg.dim)
        throw DimensionMismatch("commutator_map: quotient coordinates expected");
    Vector x = cq.qz.section.apply(mbar);
    Vector y = cq.qz.section.apply(qbar);
    Vector val = p.q.bracket(x, y) + p.q.bracket(y, x);
    if (p.z_lie.dim() > 0) {
        // independence of the lift: shifting either argument by a central
        // element must not change the value
        Vector z = p.z_lie.basis_row(0);
        Vector alt = p.q.bracket(x + z, y) + p.q.bracket(y, x + z);
        if (alt != val) throw Error("internal: commutator map depends on the lift");
    }
    return val;
}

VerifyResult verify_certificate(const Pair& p1, const Pair& p2, const Certificate& cert) {
    VerifyResult out;
    CentralQuotient c1 = central_quotient(p1), c2 = central_quotient(p2);
    const size_t d1 = c1.qz.alg.dim, d2 = c2.qz.alg.dim;
    const size_t k1 = p1.k_lie.space.dim(), k2 = p2.k_lie.space.dim();

    if (cert.alpha.domain_dim != d1 || cert.alpha.codomain_dim != d2 ||
        cert.beta.domain_dim != k1 || cert.beta.codomain_dim != k2) {
        out.kind = VerifyFailure::ShapeMismatch;
        out.detail = "certificate blocks do not match the quotient/commutator dimensions";
        return out;
    }
    if (d1 != d2 || k1 != k2 || !cert.alpha.is_invertible()) {
        out.kind = VerifyFailure::AlphaNotInvertible;
        return out;
    }
    if (cert.mode == CertMode::Strict) {
        HomCheck hc = hom_check(cert.alpha, c1.qz.alg, c2.qz.alg);
        if (!hc.ok) {
            out.kind = VerifyFailure::AlphaNotHomomorphism;
            out.i = hc.i;
            out.j = hc.j;
            out.detail = "alpha fails to be multiplicative at quotient basis pair (" +
                         c1.qz.alg.name_of(hc.i) + "," + c1.qz.alg.name_of(hc.j) + ")";
            return out;
        }
    }
    std::vector<Vector> img_rows;
    for (size_t i = 0; i < c1.m_bar.dim(); ++i)
        img_rows.push_back(cert.alpha.apply(c1.m_bar.basis_row(i)));
    if (Subspace::from_vectors(p2.q.field, d2, img_rows) != c2.m_bar) {
        out.kind = VerifyFailure::AlphaImageMismatch;
        out.detail = "alpha(m1/Z1) differs from m2/Z2";
        return out;
    }
    if (!cert.beta.is_invertible()) {
        out.kind = VerifyFailure::BetaNotInvertible;
        return out;
    }
    for (size_t i = 0; i < c1.m_bar.dim(); ++i)
        for (size_t j = 0; j < d1; ++j) {
            Vector u = c1.m_bar.basis_row(i);
            Vector v = basis_vec(p1.q.field, d1, j);
            Vector cval = commutator_in(c1, p1, u, v);
            auto kc = p1.k_lie.space.coords_of(cval);
            if (!kc) throw Error("internal: commutator value escapes [m,q]_Lie");
            Vector lhs = embed_in(p2.k_lie.space, cert.beta.apply(*kc));
            Vector rhs = commutator_in(c2, p2, cert.alpha.apply(u), cert.alpha.apply(v));
            if (lhs != rhs) {
                out.kind = VerifyFailure::DiagramFails;
                out.i = i;
                out.j = j;
                out.detail = "diagram square fails at (m-basis " + std::to_string(i + 1) +
                             ", quotient basis " + c1.qz.alg.name_of(j) + ")";
                return out;
            }
        }
    out.ok = true;
    out.kind = VerifyFailure::None;
    return out;
}

InducedBeta induced_beta(const Pair& p1, const Pair& p2, const LinearMap& alpha) {
    InducedBeta out;
    CentralQuotient c1 = central_quotient(p1), c2 = central_quotient(p2);
    const size_t k1 = p1.k_lie.space.dim(), k2 = p2.k_lie.space.dim();
    if (!alpha.is_invertible()) {
        out.reason = "alpha is not invertible";
        return out;
    }
    std::vector<Vector> img_rows;
    for (size_t i = 0; i < c1.m_bar.dim(); ++i)
        img_rows.push_back(alpha.apply(c1.m_bar.basis_row(i)));
    if (Subspace::from_vectors(p2.q.field, c2.qz.alg.dim, img_rows) != c2.m_bar) {
        out.reason = "alpha(m1/Z1) differs from m2/Z2";
        return out;
    }

    std::vector<Vector> lhs_coords, rhs_coords;
    for (size_t i = 0; i < c1.m_bar.dim(); ++i)
        for (size_t j = 0; j < c1.qz.alg.dim; ++j) {
            Vector u = c1.m_bar.basis_row(i);
            Vector v = basis_vec(p1.q.field, c1.qz.alg.dim, j);
            auto kc = p1.k_lie.space.coords_of(commutator_in(c1, p1, u, v));
            if (!kc) throw Error("internal: commutator value escapes [m,q]_Lie");
            Vector c2val = commutator_in(c2, p2, alpha.apply(u), alpha.apply(v));
            auto kc2 = p2.k_lie.space.coords_of(c2val);
            if (!kc2) {
                out.reason = "alpha-image commutator escapes [m2,q2]_Lie";
                return out;
            }
            lhs_coords.push_back(*kc);
            rhs_coords.push_back(*kc2);
        }

    // the C-values must span all of K1, otherwise beta is underdetermined
    if (Subspace::from_vectors(p1.q.field, k1, lhs_coords).dim() != k1) {
        out.reason = "C-values do not span [m1,q1]_Lie; beta is underdetermined";
        return out;
    }

    // solve beta row by row: beta[r] . lhs = rhs[r] for every equation
    Matrix U = Matrix::from_rows(p1.q.field, lhs_coords, k1);
    Matrix beta_mat(p1.q.field, k2, k1);
    for (size_t r = 0; r < k2; ++r) {
        Vector rhs_col(p1.q.field, rhs_coords.size());
        for (size_t t = 0; t < rhs_coords.size(); ++t) rhs_col[t] = rhs_coords[t][r];
        SolveResult sol = solve(U, rhs_col);
        if (!sol.solvable) {
            out.reason = "no linear beta matches the commutator values";
            return out;
        }
        for (size_t ccol = 0; ccol < k1; ++ccol) beta_mat.at(r, ccol) = sol.particular[ccol];
    }
    LinearMap beta = LinearMap::from_matrix(std::move(beta_mat));
    if (!beta.is_invertible()) {
        out.reason = "forced beta is not invertible";
        return out;
    }
    out.ok = true;
    out.beta = std::move(beta);
    return out;
}

namespace {

Subspace annihilator(const LeibnizAlgebra& q, bool left) {
    const size_t n = q.dim;
    Matrix sys(q.field, n * n, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
            for (size_t i = 0; i < n; ++i)
                sys.at(j * n + k, i) = left ? q.cc(i, j, k) : q.cc(j, i, k);
    return Subspace::from_rows(solve(sys, Vector(q.field, n * n)).kernel_basis);
}

Subspace bracket_span(const LeibnizAlgebra& q, const Subspace& a, const Subspace& b) {
    std::vector<Vector> gens;
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < b.dim(); ++j) {
            gens.push_back(q.bracket(a.basis_row(i), b.basis_row(j)));
            gens.push_back(q.bracket(b.basis_row(j), a.basis_row(i)));
        }
    return Subspace::from_vectors(q.field, q.dim, gens);
}

}  // namespace

Fingerprint fingerprint(const Pair& p) {
    Fingerprint fp{};
    fp.dim_q = p.q.dim;
    fp.dim_m = p.m.space.dim();
    fp.dim_z = p.z_lie.dim();
    fp.dim_k = p.k_lie.space.dim();
    fp.dim_leib = ideal_closure(p.q, squares_span(p.q)).space.dim();
    fp.dim_center = two_sided_center(p.q).dim();
    Subspace full = Subspace::full(p.q.field, p.q.dim);
    Subspace lc = full;
    for (int t = 0; t < 4; ++t) {
        lc = bracket_span(p.q, lc, full);
        fp.lower_central.push_back(lc.dim());
    }
    Subspace dv = full;
    for (int t = 0; t < 4; ++t) {
        dv = bracket_span(p.q, dv, dv);
        fp.derived.push_back(dv.dim());
    }
    fp.dim_left_ann = annihilator(p.q, true).dim();
    fp.dim_right_ann = annihilator(p.q, false).dim();
    return fp;
}

std::string Fingerprint::str() const {
    std::string s = "dim q=" + std::to_string(dim_q) + " m=" + std::to_string(dim_m) +
                    " Z=" + std::to_string(dim_z) + " K=" + std::to_string(dim_k) +
                    " Leib=" + std::to_string(dim_leib) + " Z2s=" + std::to_string(dim_center) +
                    " lcs=[";
    for (size_t i = 0; i < lower_central.size(); ++i)
        s += (i ? "," : "") + std::to_string(lower_central[i]);
    s += "] der=[";
    for (size_t i = 0; i < derived.size(); ++i) s += (i ? "," : "") + std::to_string(derived[i]);
    s += "] lann=" + std::to_string(dim_left_ann) + " rann=" + std::to_string(dim_right_ann);
    return s;
}

// ------------------------------------------------------------------ search --

namespace {

struct Backtrack {
    const LeibnizAlgebra* A = nullptr;
    const LeibnizAlgebra* B = nullptr;
    size_t m_block = 0;  // slots < m_block map into the first m_block coords
    std::vector<Scalar> coeffs;
    size_t budget = 0;
    size_t nodes = 0;
    bool exhausted_budget = false;
    std::vector<Vector> images;

    bool rank_ok(const Vector& cand, size_t slot) {
        Matrix m(A->field, slot + 1, A->dim);
        for (size_t i = 0; i < slot; ++i) m.set_row(i, images[i]);
        m.set_row(slot, cand);
        return rref(m).pivots.size() == slot + 1;
    }

    // all bracket constraints decidable once slots 0..k are assigned and
    // touching slot k
    bool brackets_ok(size_t k) {
        for (size_t i = 0; i <= k; ++i)
            for (size_t j = 0; j <= k; ++j) {
                Vector b = A->bracket_basis(i, j);
                bool touches = (i == k || j == k);
                bool complete = true;
                for (size_t l = 0; l < A->dim; ++l)
                    if (!b[l].is_zero()) {
                        if (l > k) complete = false;
                        if (l == k) touches = true;
                    }
                if (!complete || !touches) continue;
                Vector lhs = B->bracket(images[i], images[j]);
                Vector rhs(B->field, B->dim);
                for (size_t l = 0; l <= k; ++l)
                    if (!b[l].is_zero()) rhs = rhs + images[l].scaled(b[l]);
                if (lhs != rhs) return false;
            }
        return true;
    }

    // a bracket relation that pins the image of slot k, if any
    std::optional<Vector> determined(size_t k) {
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) {
                Vector b = A->bracket_basis(i, j);
                if (b[k].is_zero()) continue;
                bool usable = true;
                for (size_t l = k + 1; l < A->dim; ++l)
                    if (!b[l].is_zero()) usable = false;
                if (!usable) continue;
                Vector val = B->bracket(images[i], images[j]);
                for (size_t l = 0; l < k; ++l)
                    if (!b[l].is_zero()) val = val - images[l].scaled(b[l]);
                return val.scaled(b[k].inverse());
            }
        return std::nullopt;
    }

    bool in_m_block(const Vector& v) {
        for (size_t l = m_block; l < v.size(); ++l)
            if (!v[l].is_zero()) return false;
        return true;
    }

    template <typename OnComplete>
    bool dfs(size_t slot, const OnComplete& on_complete) {
        if (slot == A->dim) return on_complete(images);
        auto try_candidate = [&](const Vector& cand) {
            if (++nodes > budget) {
                exhausted_budget = true;
                return false;
            }
            if (slot < m_block && !in_m_block(cand)) return false;
            if (!rank_ok(cand, slot)) return false;
            images.push_back(cand);
            bool ok = brackets_ok(slot) && dfs(slot + 1, on_complete);
            if (!ok) images.pop_back();
            return ok;
        };
        if (auto det = determined(slot)) return try_candidate(*det);

        const size_t dim = B->dim;
        const size_t free_lo = 0;
        const size_t free_hi = slot < m_block ? m_block : dim;
        std::vector<size_t> odo(free_hi - free_lo, 0);
        for (;;) {
            Vector cand(B->field, dim);
            for (size_t t = 0; t < odo.size(); ++t) cand[free_lo + t] = coeffs[odo[t]];
            if (try_candidate(cand)) return true;
            if (exhausted_budget) return false;
            size_t t = 0;
            for (; t < odo.size(); ++t) {
                if (++odo[t] < coeffs.size()) break;
                odo[t] = 0;
            }
            if (t == odo.size()) return false;
        }
    }
};

std::vector<Scalar> coefficient_set(const Field& f) {
    std::vector<Scalar> cs;
    if (f.is_rationals()) {
        cs.push_back(Scalar::of_int(f, 0));
        cs.push_back(Scalar::of_int(f, 1));
        cs.push_back(Scalar::of_int(f, -1));
        cs.push_back(Scalar::of_int(f, 2));
        cs.push_back(Scalar::of_int(f, -2));
        cs.push_back(Scalar::rational(BigInt(1), BigInt(2)));
        cs.push_back(Scalar::rational(BigInt(-1), BigInt(2)));
    } else {
        for (uint64_t v = 0; v < f.p; ++v) cs.push_back(Scalar::residue(f, v));
    }
    return cs;
}

// basis of the space adapted to a distinguished subspace: its RREF rows
// first, then the deterministic complement
Matrix adapted_basis(const Subspace& sub, size_t ambient, const Field& f) {
    Matrix comp = complement_rows(sub, Subspace::full(f, ambient));
    Matrix rows(f, ambient, ambient);
    for (size_t i = 0; i < sub.dim(); ++i) rows.set_row(i, sub.basis_row(i));
    for (size_t i = 0; i < comp.rows(); ++i) rows.set_row(sub.dim() + i, comp.row(i));
    return rows;
}

}  // namespace

SearchResult search_isoclinism(const Pair& p1, const Pair& p2, size_t budget) {
    SearchResult out;
    CentralQuotient c1 = central_quotient(p1), c2 = central_quotient(p2);
    if (c1.qz.alg.dim != c2.qz.alg.dim || c1.m_bar.dim() != c2.m_bar.dim() ||
        p1.k_lie.space.dim() != p2.k_lie.space.dim()) {
        out.status = SearchStatus::NotIsoclinic;
        out.reason = "invariant mismatch: dims (q/Z, m/Z, K) = (" +
                     std::to_string(c1.qz.alg.dim) + "," + std::to_string(c1.m_bar.dim()) + "," +
                     std::to_string(p1.k_lie.space.dim()) + ") vs (" +
                     std::to_string(c2.qz.alg.dim) + "," + std::to_string(c2.m_bar.dim()) + "," +
                     std::to_string(p2.k_lie.space.dim()) + ")";
        return out;
    }
    const Field f = p1.q.field;
    RebaseResult a1 = rebase(c1.qz.alg, adapted_basis(c1.m_bar, c1.qz.alg.dim, f));
    RebaseResult a2 = rebase(c2.qz.alg, adapted_basis(c2.m_bar, c2.qz.alg.dim, f));

    Backtrack bt;
    bt.A = &a1.alg;
    bt.B = &a2.alg;
    bt.m_block = c1.m_bar.dim();
    bt.coeffs = coefficient_set(f);
    bt.budget = budget;

    bool found = bt.dfs(0, [&](const std::vector<Vector>& images) {
        LinearMap alpha_adapted = LinearMap::from_images(f, images, a2.alg.dim);
        // translate to the natural quotient coordinates
        LinearMap alpha =
            a2.to_original.compose(alpha_adapted).compose(a1.to_original.inverse());
        InducedBeta ib = induced_beta(p1, p2, alpha);
        if (!ib.ok) return false;
        Certificate cert{alpha, ib.beta, CertMode::Strict};
        if (!verify_certificate(p1, p2, cert).ok) return false;
        out.cert = std::move(cert);
        return true;
    });
    out.nodes = bt.nodes;
    if (found) {
        out.status = SearchStatus::Found;
        return out;
    }
    if (bt.exhausted_budget) {
        out.status = SearchStatus::Inconclusive;
        out.reason = "budget exhausted after " + std::to_string(bt.nodes) + " assignments";
        return out;
    }
    if (f.is_rationals()) {
        out.status = SearchStatus::Inconclusive;
        out.reason = "bounded rational coefficient set exhausted";
    } else {
        out.status = SearchStatus::NotIsoclinic;
        out.reason = "exhaustive search over " + f.str() + " found no certificate";
    }
    return out;
}

IsoSearchResult search_pair_isomorphism(const Pair& p1, const Pair& p2, size_t budget,
                                        bool use_fingerprint) {
    IsoSearchResult out;
    if (p1.q.dim != p2.q.dim || p1.m.space.dim() != p2.m.space.dim()) {
        out.status = IsoSearchStatus::NotIsomorphic;
        out.reason = "dimension mismatch";
        return out;
    }
    if (use_fingerprint && !(fingerprint(p1) == fingerprint(p2))) {
        out.status = IsoSearchStatus::NotIsomorphic;
        out.reason = "fingerprint mismatch";
        return out;
    }
    const Field f = p1.q.field;
    RebaseResult a1 = rebase(p1.q, adapted_basis(p1.m.space, p1.q.dim, f));
    RebaseResult a2 = rebase(p2.q, adapted_basis(p2.m.space, p2.q.dim, f));

    Backtrack bt;
    bt.A = &a1.alg;
    bt.B = &a2.alg;
    bt.m_block = p1.m.space.dim();
    bt.coeffs = coefficient_set(f);
    bt.budget = budget;

    bool found = bt.dfs(0, [&](const std::vector<Vector>& images) {
        LinearMap phi_adapted = LinearMap::from_images(f, images, a2.alg.dim);
        LinearMap phi = a2.to_original.compose(phi_adapted).compose(a1.to_original.inverse());
        if (!hom_check(phi, p1.q, p2.q).ok) return false;
        out.phi = std::move(phi);
        return true;
    });
    out.nodes = bt.nodes;
    if (found) {
        out.status = IsoSearchStatus::Found;
        return out;
    }
    if (bt.exhausted_budget) {
        out.status = IsoSearchStatus::Inconclusive;
        out.reason = "budget exhausted after " + std::to_string(bt.nodes) + " assignments";
        return out;
    }
    if (f.is_rationals()) {
        out.status = IsoSearchStatus::Inconclusive;
        out.reason = "bounded rational coefficient set exhausted";
    } else {
        out.status = IsoSearchStatus::NotIsomorphic;
        out.reason = "exhaustive search over " + f.str() + " found no isomorphism";
    }
    return out;
}

// --------------------------------------------------------------- lemma 1 --

QuotientIsoclinism quotient_isoclinism(const Pair& p, const Subspace& n) {
    IdealHandle n_ideal = make_ideal(p.q, n);
    if (!p.m.space.contains(n)) throw NotContained("n must be contained in m");
    Subspace nk = subspace_intersect(n, p.k_lie.space);

    auto quotient_pair = [&](const Subspace& by) {
        QuotientResult qr = quotient(p.q, make_ideal(p.q, by));
        std::vector<Vector> rows;
        for (size_t i = 0; i < p.m.space.dim(); ++i)
            rows.push_back(qr.projection.apply(p.m.space.basis_row(i)));
        Subspace m_img = Subspace::from_vectors(p.q.field, qr.alg.dim, rows);
        return std::pair<QuotientResult, Pair>(qr, make_pair(qr.alg, m_img));
    };

    auto [qr_bar, p_bar] = quotient_pair(n);
    auto [qr_tilde, p_tilde] = quotient_pair(nk);

    // gamma: q/(n cap K) ->> q/n
    LinearMap gamma = qr_bar.projection.compose(qr_tilde.section);

    CentralQuotient ct = central_quotient(p_tilde), cb = central_quotient(p_bar);
    std::vector<Vector> alpha_rows;
    for (size_t i = 0; i < ct.qz.alg.dim; ++i) {
        Vector in_tilde = ct.qz.section.image_of_basis(i);
        alpha_rows.push_back(cb.qz.projection.apply(gamma.apply(in_tilde)));
    }
    LinearMap alpha = LinearMap::from_images(p.q.field, alpha_rows, cb.qz.alg.dim);

    std::vector<Vector> beta_rows;
    for (size_t i = 0; i < p_tilde.k_lie.space.dim(); ++i) {
        Vector img = gamma.apply(p_tilde.k_lie.space.basis_row(i));
        auto kc = p_bar.k_lie.space.coords_of(img);
        if (!kc) throw Error("internal: gamma image escapes the commutator");
        beta_rows.push_back(*kc);
    }
    LinearMap beta = LinearMap::from_images(p.q.field, beta_rows, p_bar.k_lie.space.dim());

    QuotientIsoclinism out{std::move(p_bar), std::move(p_tilde),
                           Certificate{alpha, beta, CertMode::Strict}};
    VerifyResult vr = verify_certificate(out.p_tilde, out.p_bar, out.cert);
    if (!vr.ok) throw Error("internal: quotient isoclinism certificate fails: " + vr.detail);
    return out;
}

// ------------------------------------------------------------ stem reduce --

namespace {

bool admissible_reducer(const Pair& p, const Subspace& s) {
    return is_two_sided_ideal(p.q, s) && subspace_intersect(s, p.k_lie.space).dim() == 0;
}

// exhaustive over a finite field: maximal-dimension admissible ideal inside
// Z, deterministic tie-break on the RREF basis
Subspace best_reducer_exhaustive(const Pair& p) {
    const Subspace& Z = p.z_lie;
    Subspace best = Subspace::zero(p.q.field, p.q.dim);
    enumerate_subspaces(p.q.field, Z.dim(), [&](const Subspace& in_z) {
        std::vector<Vector> rows;
        for (size_t i = 0; i < in_z.dim(); ++i) rows.push_back(embed_in(Z, in_z.basis_row(i)));
        Subspace s = Subspace::from_vectors(p.q.field, p.q.dim, rows);
        if (!admissible_reducer(p, s)) return true;
        if (s.dim() > best.dim() ||
            (s.dim() == best.dim() && Matrix::compare(s.basis(), best.basis()) < 0))
            best = s;
        return true;
    });
    return best;
}

// greedy over Q: start from a complement of K inside the two-sided-central
// part of Z, then extend by closure-stable single vectors and pair sums
Subspace best_reducer_greedy(const Pair& p) {
    Subspace z0 = subspace_intersect(p.z_lie, two_sided_center(p.q));
    Subspace s = complement(subspace_intersect(p.k_lie.space, z0), z0);

    std::vector<Vector> cands;
    for (size_t i = 0; i < p.z_lie.dim(); ++i) cands.push_back(p.z_lie.basis_row(i));
    for (size_t i = 0; i < p.z_lie.dim(); ++i)
        for (size_t j = i + 1; j < p.z_lie.dim(); ++j)
            cands.push_back(p.z_lie.basis_row(i) + p.z_lie.basis_row(j));
    for (const Vector& c : cands) {
        if (s.contains(c)) continue;
        Subspace grown = subspace_sum(s, Subspace::from_vectors(p.q.field, p.q.dim, {c}));
        Subspace closed = ideal_closure(p.q, grown).space;
        if (subspace_intersect(closed, p.k_lie.space).dim() == 0 && p.m.space.contains(closed))
            s = closed;
    }
    return s;
}

}  // namespace

StemReduction stem_reduce(const Pair& p) {
    Subspace s;
    bool exhaustive = !p.q.field.is_rationals() && p.z_lie.dim() <= 6;
    s = exhaustive ? best_reducer_exhaustive(p) : best_reducer_greedy(p);

    QuotientIsoclinism qi = quotient_isoclinism(p, s);
    // with s cap K = 0 the tilde pair is p itself on identical coordinates
    StemReduction out{std::move(qi.p_bar), IdealHandle{s}, std::move(qi.cert)};
    if (!is_stem(out.reduced)) {
        if (exhaustive) throw Error("internal: exhaustive stem reduction missed a stem pair");
        throw StemReductionIncomplete();
    }
    return out;
}

// ------------------------------------------------------- corollaries, Thm 3 --

Corollary2Result corollary2_check(const Pair& p1, const Pair& p2, const Certificate& cert) {
    if (!is_stem(p1) || !is_stem(p2)) throw NotStem();
    VerifyResult vr = verify_certificate(p1, p2, cert);
    if (!vr.ok) throw CertificateInvalid("certificate fails: " + vr.detail);
    Corollary2Result out;
    const size_t z1 = p1.z_lie.dim();
    std::vector<Vector> rows, ambient_rows;
    for (size_t i = 0; i < z1; ++i) {
        auto kc = p1.k_lie.space.coords_of(p1.z_lie.basis_row(i));
        if (!kc) throw NotStem();
        Vector amb = embed_in(p2.k_lie.space, cert.beta.apply(*kc));
        ambient_rows.push_back(amb);
        auto zc = p2.z_lie.coords_of(amb);
        if (!zc) return out;  // beta(Z1) not inside Z2
        rows.push_back(*zc);
    }
    if (Subspace::from_vectors(p2.q.field, p2.q.dim, ambient_rows) != p2.z_lie) return out;
    out.ok = true;
    out.restriction = LinearMap::from_images(p2.q.field, rows, p2.z_lie.dim());
    return out;
}

Corollary1Result corollary1_restrict(const Pair& p1, const Pair& p2, const Certificate& cert) {
    Corollary1Result out;
    out.m1_alg = subalgebra_on(p1.q, p1.m.space);
    out.m2_alg = subalgebra_on(p2.q, p2.m.space);
    out.pm1 = make_full_pair(out.m1_alg.alg);
    out.pm2 = make_full_pair(out.m2_alg.alg);

    CentralQuotient pc1 = central_quotient(p1), pc2 = central_quotient(p2);
    CentralQuotient mc1 = central_quotient(out.pm1), mc2 = central_quotient(out.pm2);

    // alpha' on m/Z_Lie(m): lift to m, move through the ambient certificate,
    // project back down on the other side
    std::vector<Vector> arows;
    for (size_t i = 0; i < mc1.qz.alg.dim; ++i) {
        Vector in_m1 = mc1.qz.section.image_of_basis(i);
        Vector amb1 = out.m1_alg.inclusion.apply(in_m1);
        Vector moved = cert.alpha.apply(pc1.qz.projection.apply(amb1));
        Vector amb2 = pc2.qz.section.apply(moved);
        auto mc = p2.m.space.coords_of(amb2);
        if (!mc) throw CertificateInvalid("alpha does not restrict to the ideals");
        arows.push_back(mc2.qz.projection.apply(*mc));
    }
    LinearMap alpha2 = LinearMap::from_images(p1.q.field, arows, mc2.qz.alg.dim);

    // beta' = beta restricted to [m,m]_Lie
    std::vector<Vector> brows;
    for (size_t i = 0; i < out.pm1.k_lie.space.dim(); ++i) {
        Vector amb1 = out.m1_alg.inclusion.apply(out.pm1.k_lie.space.basis_row(i));
        auto kc = p1.k_lie.space.coords_of(amb1);
        if (!kc) throw Error("internal: [m,m]_Lie escapes [m,q]_Lie");
        Vector amb2 = embed_in(p2.k_lie.space, cert.beta.apply(*kc));
        auto mc = p2.m.space.coords_of(amb2);
        if (!mc) throw CertificateInvalid("beta does not restrict to [m2,m2]_Lie");
        auto kk = out.pm2.k_lie.space.coords_of(*mc);
        if (!kk) throw CertificateInvalid("beta does not restrict to [m2,m2]_Lie");
        brows.push_back(*kk);
    }
    LinearMap beta2 = LinearMap::from_images(p1.q.field, brows, out.pm2.k_lie.space.dim());
    out.cert = Certificate{alpha2, beta2, cert.mode};
    return out;
}

Theorem3Result theorem3_construct(const Pair& p1, const Pair& p2, const Certificate& cert,
                                  EpsilonMode eps_mode) {
    Theorem3Result out;
    VerifyResult vr = verify_certificate(p1, p2, cert);
    if (!vr.ok) throw CertificateInvalid("certificate fails: " + vr.detail);

    SubalgebraResult m1_alg = subalgebra_on(p1.q, p1.m.space);
    SubalgebraResult m2_alg = subalgebra_on(p2.q, p2.m.space);
    Pair pm1 = make_full_pair(m1_alg.alg);
    Pair pm2 = make_full_pair(m2_alg.alg);
    if (!is_stem(pm1) || !is_stem(pm2)) {
        out.status = Theorem3Status::ConditionFailedA;
        out.detail = !is_stem(pm1) ? "m1 is not a stem algebra" : "m2 is not a stem algebra";
        return out;
    }
    out.eps = epsilon_condition(m1_alg.alg, Subspace::full(p1.q.field, m1_alg.alg.dim), eps_mode);
    if (!out.eps.pass) {
        out.status = Theorem3Status::ConditionFailedB;
        out.detail = "epsilon-commutativity fails on m1";
        return out;
    }

    StemFactorResult sf1 = stem_factor_algebra(p1);
    StemFactorResult sf2 = stem_factor_algebra(p2);
    out.mf = sf1.mf;
    out.ng = sf2.mf;
    const FactorSetData& F = sf1.mf.data;
    const FactorSetData& G = sf2.mf.data;

    // tau2 = beta restricted to the Lie-centers
    LinearMap tau2;
    try {
        Corollary2Result c2r = corollary2_check(p1, p2, cert);
        if (!c2r.ok) {
            out.status = Theorem3Status::VerificationFailed;
            out.detail = "beta does not restrict to an isomorphism of the Lie-centers";
            return out;
        }
        tau2 = c2r.restriction;
    } catch (const NotStem&) {
        out.status = Theorem3Status::VerificationFailed;
        out.detail = "pairs are not stem pairs";
        return out;
    }

    // omega1 = alpha restricted to m/Z, in factor-set quotient coordinates
    CentralQuotient pc1 = central_quotient(p1), pc2 = central_quotient(p2);
    const size_t d1 = F.quot.dim, d2 = G.quot.dim;
    std::vector<Vector> omrows;
    for (size_t i = 0; i < d1; ++i) {
        Vector amb1 = m1_alg.inclusion.apply(F.splitting.image_of_basis(i));
        Vector moved = cert.alpha.apply(pc1.qz.projection.apply(amb1));
        Vector amb2 = pc2.qz.section.apply(moved);
        auto mc = p2.m.space.coords_of(amb2);
        if (!mc) throw CertificateInvalid("alpha does not carry m1/Z1 into m2/Z2");
        omrows.push_back(G.quot_projection.apply(*mc));
    }
    LinearMap omega1 = LinearMap::from_images(p1.q.field, omrows, d2);
    if (!omega1.is_invertible()) {
        out.status = Theorem3Status::VerificationFailed;
        out.detail = "restricted alpha is not invertible on m/Z";
        return out;
    }

    // solve for d:  d(omega1([b_i, b_j])) = g(omega1 b_i, omega1 b_j) - tau2(f(b_i, b_j))
    std::vector<Vector> urows;
    std::vector<Vector> wrows;
    for (size_t i = 0; i < d1; ++i)
        for (size_t j = 0; j < d1; ++j) {
            urows.push_back(omega1.apply(F.quot.bracket_basis(i, j)));
            Vector g_val =
                G.f_bilinear(omega1.image_of_basis(i), omega1.image_of_basis(j));
            wrows.push_back(g_val - tau2.apply(F.f_at(i, j)));
        }
    const size_t k2 = G.base.dim;
    Matrix U = Matrix::from_rows(p1.q.field, urows, d2);
    Matrix d_mat(p1.q.field, k2, d2);
    for (size_t r = 0; r < k2; ++r) {
        Vector rhs(p1.q.field, wrows.size());
        for (size_t t = 0; t < wrows.size(); ++t) rhs[t] = wrows[t][r];
        SolveResult sol = solve(U, rhs);
        if (!sol.solvable) {
            out.status = Theorem3Status::VerificationFailed;
            out.detail = "no linear d satisfies the transported factor-set relation";
            return out;
        }
        for (size_t ccol = 0; ccol < d2; ++ccol) d_mat.at(r, ccol) = sol.particular[ccol];
    }
    LinearMap d_map = LinearMap::from_matrix(std::move(d_mat));

    // lambda(z, mbar) = (tau2 z + d(omega1 mbar), omega1 mbar)
    const size_t k1 = F.base.dim;
    Matrix lam(p1.q.field, k2 + d2, k1 + d1);
    for (size_t c = 0; c < k1; ++c)
        for (size_t r = 0; r < k2; ++r) lam.at(r, c) = tau2.mat.at(r, c);
    for (size_t c = 0; c < d1; ++c) {
        Vector om = omega1.image_of_basis(c);
        Vector dz = d_map.apply(om);
        for (size_t r = 0; r < k2; ++r) lam.at(r, k1 + c) = dz[r];
        for (size_t r = 0; r < d2; ++r) lam.at(k2 + r, k1 + c) = om[r];
    }
    out.lambda = LinearMap::from_matrix(std::move(lam));
    HomCheck hc = hom_check(out.lambda, out.mf.alg, out.ng.alg);
    if (!hc.ok || !out.lambda.is_invertible()) {
        out.status = Theorem3Status::VerificationFailed;
        out.detail = "constructed lambda is not an algebra isomorphism";
        return out;
    }
    out.m_iso = sf2.iso_to_m.compose(out.lambda).compose(sf1.iso_to_m.inverse());
    HomCheck mc = hom_check(out.m_iso, m1_alg.alg, m2_alg.alg);
    if (!mc.ok || !out.m_iso.is_invertible()) {
        out.status = Theorem3Status::VerificationFailed;
        out.detail = "composed ideal isomorphism fails verification";
        return out;
    }
    out.status = Theorem3Status::Iso;
    return out;
}

}  // namespace lzb
