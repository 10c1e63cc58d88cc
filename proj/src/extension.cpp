#include "extension.hpp"

namespace lzb {

Vector FactorSetData::f_bilinear(const Vector& x, const Vector& y) const {
    Vector out(base.field, base.dim);
    for (size_t i = 0; i < quot.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < quot.dim; ++j) {
            if (y[j].is_zero()) continue;
            out = out + f_at(i, j).scaled(x[i] * y[j]);
        }
    }
    return out;
}

Vector FactorSetData::act_L(const Vector& xbar, const Vector& v) const {
    Vector out(base.field, base.dim);
    for (size_t i = 0; i < quot.dim; ++i)
        if (!xbar[i].is_zero()) out = out + L[i].apply(v).scaled(xbar[i]);
    return out;
}

Vector FactorSetData::act_R(const Vector& xbar, const Vector& v) const {
    Vector out(base.field, base.dim);
    for (size_t i = 0; i < quot.dim; ++i)
        if (!xbar[i].is_zero()) out = out + R[i].apply(v).scaled(xbar[i]);
    return out;
}

FactorSetData factor_set_from_pair(const LeibnizAlgebra& q, const IdealHandle& m) {
    require_validated(q);
    QuotientResult qr = quotient(q, m);
    SubalgebraResult sub = subalgebra_on(q, m.space);
    const size_t d = qr.alg.dim, k = sub.alg.dim;

    FactorSetData out;
    out.base = sub.alg;
    out.quot = qr.alg;
    out.convention = q.kind;
    out.has_ambient = true;
    out.splitting = qr.section;
    out.base_inclusion = sub.inclusion;
    out.quot_projection = qr.projection;

    auto m_coords = [&](const Vector& v) {
        auto t = m.space.coords_of(v);
        if (!t) throw Error("internal: factor set value escapes the kernel");
        return *t;
    };

    out.f.assign(d * d, Vector(q.field, k));
    for (size_t x = 0; x < d; ++x)
        for (size_t y = 0; y < d; ++y) {
            Vector lift_bracket = q.bracket(qr.section.image_of_basis(x), qr.section.image_of_basis(y));
            Vector quot_bracket = qr.alg.bracket_basis(x, y);
            Vector fxy = lift_bracket - qr.section.apply(quot_bracket);
            out.f_at(x, y) = m_coords(fxy);
        }

    out.L.assign(d, Matrix(q.field, k, k));
    out.R.assign(d, Matrix(q.field, k, k));
    for (size_t x = 0; x < d; ++x) {
        Vector tx = qr.section.image_of_basis(x);
        for (size_t i = 0; i < k; ++i) {
            Vector mi = sub.inclusion.image_of_basis(i);
            Vector lcol = m_coords(q.bracket(mi, tx));
            Vector rcol = m_coords(q.bracket(tx, mi));
            for (size_t r = 0; r < k; ++r) {
                out.L[x].at(r, i) = lcol[r];
                out.R[x].at(r, i) = rcol[r];
            }
        }
    }
    return out;
}

FactorIdentityCheck check_factor_identity(const FactorSetData& d) {
    const size_t n = d.quot.dim;
    const bool left = d.convention == LeibnizKind::Left;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t z = 0; z < n; ++z) {
                Vector ex(d.quot.field, n), ey(d.quot.field, n), ez(d.quot.field, n);
                ex[x] = Scalar::one(d.quot.field);
                ey[y] = Scalar::one(d.quot.field);
                ez[z] = Scalar::one(d.quot.field);
                Vector res;
                if (!left) {
                    // f([x,y],z) - f([x,z],y) - f(x,[y,z])
                    //   + L_z f(x,y) - L_y f(x,z) - R_x f(y,z) = 0
                    res = d.f_bilinear(d.quot.bracket_basis(x, y), ez) -
                          d.f_bilinear(d.quot.bracket_basis(x, z), ey) -
                          d.f_bilinear(ex, d.quot.bracket_basis(y, z)) +
                          d.act_L(ez, d.f_at(x, y)) - d.act_L(ey, d.f_at(x, z)) -
                          d.act_R(ex, d.f_at(y, z));
                } else {
                    // f([x,y],z) - f(x,[y,z]) + f(y,[x,z])
                    //   + L_z f(x,y) - R_x f(y,z) + R_y f(x,z) = 0
                    res = d.f_bilinear(d.quot.bracket_basis(x, y), ez) -
                          d.f_bilinear(ex, d.quot.bracket_basis(y, z)) +
                          d.f_bilinear(ey, d.quot.bracket_basis(x, z)) +
                          d.act_L(ez, d.f_at(x, y)) - d.act_R(ex, d.f_at(y, z)) +
                          d.act_R(ey, d.f_at(x, z));
                }
                if (!res.is_zero()) return {false, x, y, z};
            }
    return {};
}

ExtensionAlgebra build_extension(const FactorSetData& d) {
    FactorIdentityCheck chk = check_factor_identity(d);
    if (!chk.ok)
        throw FactorIdentityViolated("factor set identity fails at basis triple (" +
                                     std::to_string(chk.x + 1) + "," + std::to_string(chk.y + 1) +
                                     "," + std::to_string(chk.z + 1) + ")");
    const size_t k = d.base.dim, q = d.quot.dim, n = k + q;
    ExtensionAlgebra out;
    out.data = d;
    out.base_dim = k;
    out.quot_dim = q;
    out.alg = LeibnizAlgebra(d.base.field, n);
    for (size_t i = 0; i < k; ++i) out.alg.names[i] = d.base.name_of(i);
    for (size_t i = 0; i < q; ++i) out.alg.names[k + i] = d.quot.name_of(i);
    // inherited labels can collide when both parts use default names
    bool collide = false;
    for (size_t i = 0; i < n && !collide; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (out.alg.names[i] == out.alg.names[j]) {
                collide = true;
                break;
            }
    if (collide) {
        for (size_t i = 0; i < k; ++i) out.alg.names[i] = "m" + std::to_string(i + 1);
        for (size_t i = 0; i < q; ++i) out.alg.names[k + i] = "x" + std::to_string(i + 1);
    }

    auto put = [&](size_t i, size_t j, const Vector& basepart, const Vector& quotpart) {
        for (size_t r = 0; r < k; ++r) out.alg.cc(i, j, r) = basepart[r];
        for (size_t r = 0; r < q; ++r) out.alg.cc(i, j, k + r) = quotpart[r];
    };
    Vector zq(d.base.field, q);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) put(i, j, d.base.bracket_basis(i, j), zq);
    for (size_t i = 0; i < k; ++i)
        for (size_t x = 0; x < q; ++x) {
            Vector ei(d.base.field, k);
            ei[i] = Scalar::one(d.base.field);
            put(i, k + x, d.L[x].apply(ei), zq);   // [m, (0,x)] = L_x(m)
            put(k + x, i, d.R[x].apply(ei), zq);   // [(0,x), m] = R_x(m)
        }
    for (size_t x = 0; x < q; ++x)
        for (size_t y = 0; y < q; ++y) put(k + x, k + y, d.f_at(x, y), d.quot.bracket_basis(x, y));

    LeibnizCheck lc = check_leibniz(out.alg);
    if (!lc.ok())
        throw LeibnizCheckFailed("extension bracket fails the Leibniz identity at (" +
                                 std::to_string(lc.counterexample->i + 1) + "," +
                                 std::to_string(lc.counterexample->j + 1) + "," +
                                 std::to_string(lc.counterexample->k + 1) + ")");

    Matrix emb(d.base.field, n, k);
    for (size_t i = 0; i < k; ++i) emb.at(i, i) = Scalar::one(d.base.field);
    out.kernel_embedding = LinearMap::from_matrix(std::move(emb));
    Matrix proj(d.base.field, q, n);
    for (size_t i = 0; i < q; ++i) proj.at(i, k + i) = Scalar::one(d.base.field);
    out.projection = LinearMap::from_matrix(std::move(proj));
    return out;
}

Lemma2Result lemma2_reconstruct(const LeibnizAlgebra& q, const IdealHandle& m) {
    FactorSetData d = factor_set_from_pair(q, m);
    Lemma2Result out;
    out.ext = build_extension(d);
    const size_t k = out.ext.base_dim, dd = out.ext.quot_dim;
    Matrix iso(q.field, q.dim, k + dd);
    for (size_t i = 0; i < k; ++i) {
        Vector v = d.base_inclusion.image_of_basis(i);
        for (size_t r = 0; r < q.dim; ++r) iso.at(r, i) = v[r];
    }
    for (size_t x = 0; x < dd; ++x) {
        Vector v = d.splitting.image_of_basis(x);
        for (size_t r = 0; r < q.dim; ++r) iso.at(r, k + x) = v[r];
    }
    out.iso = LinearMap::from_matrix(std::move(iso));
    HomCheck hc = hom_check(out.iso, out.ext.alg, q);
    if (!hc.ok || !out.iso.is_invertible())
        throw Error("internal: reconstruction map is not an isomorphism");
    return out;
}

StemFactorResult stem_factor_algebra(const Pair& p) {
    StemFactorResult out;
    out.m_alg = subalgebra_on(p.q, p.m.space);
    // Z_Lie(m,q) written in m-coordinates
    std::vector<Vector> zrows;
    for (size_t i = 0; i < p.z_lie.dim(); ++i) {
        auto t = p.m.space.coords_of(p.z_lie.basis_row(i));
        if (!t) throw Error("internal: Z_Lie not inside m");
        zrows.push_back(*t);
    }
    Subspace z_m = Subspace::from_vectors(p.q.field, out.m_alg.alg.dim, zrows);
    IdealHandle z_ideal = make_ideal(out.m_alg.alg, z_m);
    Lemma2Result rec = lemma2_reconstruct(out.m_alg.alg, z_ideal);
    out.mf = rec.ext;
    out.iso_to_m = rec.iso;

    // kappa: i-th RREF basis vector of Z_Lie(m,q) -> (z, 0) in mf coordinates
    const size_t zn = p.z_lie.dim();
    Matrix kap(p.q.field, out.mf.alg.dim, zn);
    for (size_t i = 0; i < zn; ++i) {
        auto t = p.m.space.coords_of(p.z_lie.basis_row(i));
        auto zb = z_m.coords_of(*t);
        if (!zb) throw Error("internal: kappa coordinates");
        for (size_t r = 0; r < zn; ++r) kap.at(r, i) = (*zb)[r];
    }
    out.kappa = LinearMap::from_matrix(std::move(kap));
    return out;
}

namespace {

// beta as a map between commutator coordinate systems, restricted to carry
// Z_Lie(p1) onto Z_Lie(p2); returns the matrix z1-coords -> z2-coords.
LinearMap restrict_beta_to_centers(const Pair& p1, const Pair& p2, const LinearMap& beta) {
    const size_t z1 = p1.z_lie.dim();
    std::vector<Vector> images;
    std::vector<Vector> ambient_images;
    for (size_t i = 0; i < z1; ++i) {
        auto kc = p1.k_lie.space.coords_of(p1.z_lie.basis_row(i));
        if (!kc) throw NotStem("Z_Lie(p1) is not inside the Lie-commutator");
        Vector out_k = beta.apply(*kc);
        Vector amb(p2.q.field, p2.q.dim);
        for (size_t r = 0; r < p2.k_lie.space.dim(); ++r)
            amb = amb + p2.k_lie.space.basis_row(r).scaled(out_k[r]);
        auto zc = p2.z_lie.coords_of(amb);
        if (!zc) throw CertificateInvalid("beta does not carry Z_Lie(p1) into Z_Lie(p2)");
        images.push_back(*zc);
        ambient_images.push_back(amb);
    }
    Subspace image_span = Subspace::from_vectors(p2.q.field, p2.q.dim, ambient_images);
    if (image_span != p2.z_lie)
        throw CertificateInvalid("beta restricted to the Lie-centers is not onto");
    return LinearMap::from_images(p2.q.field, images, p2.z_lie.dim());
}

}  // namespace

TransportResult transport_factor_set(const Pair& p1, const Pair& p2, const Certificate& cert) {
    if (!is_stem(p1) || !is_stem(p2)) throw NotStem();

    StemFactorResult native2 = stem_factor_algebra(p2);
    StemFactorResult native1 = stem_factor_algebra(p1);
    const FactorSetData& fd1 = native1.mf.data;
    const FactorSetData& fd2 = native2.mf.data;

    TransportResult out;
    out.ng = native2.mf;
    out.tau2 = restrict_beta_to_centers(p1, p2, cert.beta);

    // pair quotients q_i / Z_i carry the certificate's alpha
    QuotientResult pq1 = quotient(p1.q, make_ideal(p1.q, p1.z_lie));
    QuotientResult pq2 = quotient(p2.q, make_ideal(p2.q, p2.z_lie));

    // omega1: m1/Z1 -> m2/Z2 in the factor-set quotient coordinates
    const size_t d1 = fd1.quot.dim, d2 = fd2.quot.dim;
    if (d1 != d2) throw CertificateInvalid("quotient dimensions differ");
    std::vector<Vector> om_rows;
    for (size_t i = 0; i < d1; ++i) {
        Vector amb1 = native1.m_alg.inclusion.apply(fd1.splitting.image_of_basis(i));
        Vector t = cert.alpha.apply(pq1.projection.apply(amb1));
        Vector amb2 = pq2.section.apply(t);
        auto mc = p2.m.space.coords_of(amb2);
        if (!mc) throw CertificateInvalid("alpha does not carry m1/Z1 into m2/Z2");
        om_rows.push_back(fd2.quot_projection.apply(*mc));
    }
    out.omega1 = LinearMap::from_images(p2.q.field, om_rows, d2);
    if (!out.omega1.is_invertible())
        throw CertificateInvalid("restricted alpha is not invertible on m/Z");

    // transported factor set f = beta^{-1} ( g (alpha x, alpha y) )
    LinearMap tau2_inv = out.tau2.inverse();
    out.f_data = fd1;  // base, quot, actions, splitting: native to p1
    for (size_t x = 0; x < d1; ++x)
        for (size_t y = 0; y < d1; ++y) {
            Vector g_val = fd2.f_bilinear(out.omega1.image_of_basis(x), out.omega1.image_of_basis(y));
            out.f_data.f_at(x, y) = tau2_inv.apply(g_val);
        }

    out.mf = build_extension(out.f_data);

    // theta = blockdiag(tau2, omega1), verified as an algebra isomorphism
    const size_t k1 = fd1.base.dim, k2 = fd2.base.dim;
    Matrix th(p1.q.field, k2 + d2, k1 + d1);
    for (size_t i = 0; i < k1; ++i)
        for (size_t r = 0; r < k2; ++r) th.at(r, i) = out.tau2.mat.at(r, i);
    for (size_t i = 0; i < d1; ++i)
        for (size_t r = 0; r < d2; ++r) th.at(k2 + r, k1 + i) = out.omega1.mat.at(r, i);
    out.theta = LinearMap::from_matrix(std::move(th));
    HomCheck hc = hom_check(out.theta, out.mf.alg, out.ng.alg);
    if (!hc.ok || !out.theta.is_invertible())
        throw CertificateInvalid("transported extension is not isomorphic to the target via theta");
    return out;
}

InducedMapsResult induced_maps_and_d(const LinearMap& eta, const ExtensionAlgebra& e1,
                                     const ExtensionAlgebra& e2) {
    const size_t k1 = e1.base_dim, d1 = e1.quot_dim;
    const size_t k2 = e2.base_dim, d2 = e2.quot_dim;
    if (eta.domain_dim != k1 + d1 || eta.codomain_dim != k2 + d2)
        throw DimensionMismatch("induced_maps_and_d: eta shape");
    HomCheck hc = hom_check(eta, e1.alg, e2.alg);
    if (!hc.ok || !eta.is_invertible())
        throw CertificateInvalid("eta is not an algebra isomorphism");

    // eta must carry {(z,0)} onto {(z',0)}
    std::vector<Vector> z_images;
    for (size_t i = 0; i < k1; ++i) {
        Vector img = eta.image_of_basis(i);
        for (size_t r = 0; r < d2; ++r)
            if (!img[k2 + r].is_zero())
                throw CenterNotPreserved();
        Vector zpart(e2.alg.field, k2);
        for (size_t r = 0; r < k2; ++r) zpart[r] = img[r];
        z_images.push_back(zpart);
    }
    if (k1 != k2 ||
        Subspace::from_vectors(e2.alg.field, k2, z_images).dim() != k2)
        throw CenterNotPreserved();

    InducedMapsResult out;
    out.eta2 = LinearMap::from_images(e2.alg.field, z_images, k2);

    std::vector<Vector> q_images, d_values;
    for (size_t i = 0; i < d1; ++i) {
        Vector img = eta.image_of_basis(k1 + i);
        Vector qpart(e2.alg.field, d2), zpart(e2.alg.field, k2);
        for (size_t r = 0; r < d2; ++r) qpart[r] = img[k2 + r];
        for (size_t r = 0; r < k2; ++r) zpart[r] = img[r];
        q_images.push_back(qpart);
        d_values.push_back(zpart);
    }
    out.eta1 = LinearMap::from_images(e2.alg.field, q_images, d2);
    if (!out.eta1.is_invertible())
        throw CertificateInvalid("eta does not induce an isomorphism on the quotients");
    // d(eta1(b_i)) = zpart_i, so d = DV * eta1^{-1}
    LinearMap dv = LinearMap::from_images(e2.alg.field, d_values, k2);
    out.d = dv.compose(out.eta1.inverse());

    const FactorSetData& F = e1.data;
    const FactorSetData& G = e2.data;
    // evaluate the compatibility equation at ((z1,m1),(z2,m2)) over basis vectors
    auto lhs_rhs_match = [&](const Vector& z1v, const Vector& m1v, const Vector& z2v,
                             const Vector& m2v) {
        Vector inner = F.base.bracket(z1v, z2v) + F.act_R(m1v, z2v) + F.act_L(m2v, z1v) +
                       F.f_bilinear(m1v, m2v);
        Vector lhs = out.eta2.apply(inner) +
                     out.d.apply(out.eta1.apply(F.quot.bracket(m1v, m2v)));
        Vector em1 = out.eta1.apply(m1v), em2 = out.eta1.apply(m2v);
        Vector X = out.eta2.apply(z1v) + out.d.apply(em1);
        Vector Y = out.eta2.apply(z2v) + out.d.apply(em2);
        Vector rhs = G.base.bracket(X, Y) + G.act_L(em2, X) + G.act_R(em1, Y) +
                     G.f_bilinear(em1, em2);
        return lhs == rhs;
    };
    const size_t n1 = k1 + d1;
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n1; ++j) {
            Vector z1v(e1.alg.field, k1), m1v(e1.alg.field, d1);
            Vector z2v(e1.alg.field, k1), m2v(e1.alg.field, d1);
            if (i < k1)
                z1v[i] = Scalar::one(e1.alg.field);
            else
                m1v[i - k1] = Scalar::one(e1.alg.field);
            if (j < k1)
                z2v[j] = Scalar::one(e1.alg.field);
            else
                m2v[j - k1] = Scalar::one(e1.alg.field);
            if (!lhs_rhs_match(z1v, m1v, z2v, m2v)) {
                out.ok = false;
                out.i = i;
                out.j = j;
                return out;
            }
        }
    return out;
}

}  // namespace lzb
