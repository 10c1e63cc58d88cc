#ifndef LZB_EXTENSION_HPP
#define LZB_EXTENSION_HPP

#include "certificate.hpp"
#include "pairs.hpp"

namespace lzb {

// Everything needed to build an extension of `quot` by `base`: the factor
// set f, the action maps L_x(v) = [v, tau(x)] and R_x(v) = [tau(x), v], and
// (when the data came from an ambient pair) the splitting itself.  L and R
// are stored as explicit matrices so that hand-authored (f, L, R) triples
// can be fed in without any ambient algebra.
struct FactorSetData {
    LeibnizAlgebra base;   // kernel, with its own (possibly nonzero) bracket
    LeibnizAlgebra quot;   // q*
    LeibnizKind convention = LeibnizKind::Right;  // which identity Eq.(2) uses
    std::vector<Vector> f;       // quot.dim^2 values in base coordinates
    std::vector<Matrix> L, R;    // one base.dim x base.dim matrix per quot basis vector

    bool has_ambient = false;
    LinearMap splitting;         // quot coords -> ambient (the section rho/tau)
    LinearMap base_inclusion;    // base coords -> ambient
    LinearMap quot_projection;   // ambient -> quot coords

    const Vector& f_at(size_t x, size_t y) const { return f[x * quot.dim + y]; }
    Vector& f_at(size_t x, size_t y) { return f[x * quot.dim + y]; }
    Vector f_bilinear(const Vector& x, const Vector& y) const;
    Vector act_L(const Vector& xbar, const Vector& v) const;  // [v, tau(xbar)]
    Vector act_R(const Vector& xbar, const Vector& v) const;  // [tau(xbar), v]
};

// Factor set of 0 -> m -> q -> q/m -> 0 with the deterministic-complement
// splitting; f values are verified to land in m.
FactorSetData factor_set_from_pair(const LeibnizAlgebra& q, const IdealHandle& m);

struct FactorIdentityCheck {
    bool ok = true;
    size_t x = 0, y = 0, z = 0;  // first failing basis triple of quot
};

// Coherence identity of the factor set (the convention decides which of the
// two equivalent bookkeeping forms is evaluated).
FactorIdentityCheck check_factor_identity(const FactorSetData& d);

struct ExtensionAlgebra {
    LeibnizAlgebra alg;   // on base ++ quot basis
    FactorSetData data;
    size_t base_dim = 0, quot_dim = 0;
    LinearMap kernel_embedding;  // base coords -> extension coords
    LinearMap projection;        // extension coords -> quot coords
};

// The algebra on base (+) quot with bracket
//   [(m1,x1),(m2,x2)] = ([m1,m2] + R_{x1}(m2) + L_{x2}(m1) + f(x1,x2), [x1,x2]).
// Requires check_factor_identity to pass, and the result must itself pass
// the Leibniz check.
ExtensionAlgebra build_extension(const FactorSetData& d);

struct Lemma2Result {
    ExtensionAlgebra ext;
    LinearMap iso;  // extension coords -> parent coords, (m, xbar) -> m + rho(xbar)
};

// Reconstruction of q from (m, q/m): the explicit map is verified to be an
// algebra isomorphism.
Lemma2Result lemma2_reconstruct(const LeibnizAlgebra& q, const IdealHandle& m);

struct StemFactorResult {
    ExtensionAlgebra mf;   // Z_Lie(m,q) x_f m/Z_Lie(m,q)
    LinearMap kappa;       // Z basis coords -> extension coords, z -> (z, 0)
    LinearMap iso_to_m;    // extension coords -> m-subalgebra coords
    SubalgebraResult m_alg;
};

StemFactorResult stem_factor_algebra(const Pair& p);

struct TransportResult {
    FactorSetData f_data;  // base/quot/actions of p1's side, transported f
    ExtensionAlgebra mf;   // built from f_data
    ExtensionAlgebra ng;   // native reconstruction on p2's side
    LinearMap theta;       // mf -> ng, (z, mbar) -> (beta z, alpha mbar); verified
    LinearMap tau2;        // Z1 -> Z2 in base coordinates (beta restricted)
    LinearMap omega1;      // m1/Z1 -> m2/Z2 in quot coordinates (alpha restricted)
};

// Proposition-3 transport: pulls p2's native factor set back along the
// certificate.  Requires stem pairs and beta(Z1) = Z2; theta is verified to
// be an algebra isomorphism.
TransportResult transport_factor_set(const Pair& p1, const Pair& p2, const Certificate& cert);

struct InducedMapsResult {
    LinearMap eta1;  // quot1 -> quot2
    LinearMap eta2;  // base1 -> base2
    LinearMap d;     // quot2 -> base2
    bool ok = true;  // Proposition-4 equation on all basis pairs
    size_t i = 0, j = 0;  // first failing pair of extension basis vectors
};

// Splits an isomorphism of extension algebras that preserves the embedded
// central part into eta1, eta2 and the correction d, then evaluates the
// compatibility equation relating f, g, the actions and d.
InducedMapsResult induced_maps_and_d(const LinearMap& eta, const ExtensionAlgebra& e1,
                                     const ExtensionAlgebra& e2);

}  // namespace lzb

#endif
