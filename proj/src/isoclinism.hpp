#ifndef LZB_ISOCLINISM_HPP
#define LZB_ISOCLINISM_HPP

#include "certificate.hpp"
#include "extension.hpp"
#include "pairs.hpp"

namespace lzb {

// Coordinates shared by everything that works modulo the Lie-center:
// q/Z as an algebra plus the image of m inside it.
struct CentralQuotient {
    QuotientResult qz;
    Subspace m_bar;  // projection of m, in q/Z coordinates
};

CentralQuotient central_quotient(const Pair& p);

// C(mbar, qbar) = [m,q] + [q,m], lifted through the section; the result is
// independent of the lift (asserted).
Vector commutator_map(const Pair& p, const Vector& mbar, const Vector& qbar);

enum class VerifyFailure {
    None,
    ShapeMismatch,
    AlphaNotInvertible,
    AlphaNotHomomorphism,
    AlphaImageMismatch,
    BetaNotInvertible,
    DiagramFails,
};

struct VerifyResult {
    bool ok = false;
    VerifyFailure kind = VerifyFailure::None;
    size_t i = 0, j = 0;      // witness basis pair where applicable
    std::string detail;
};

VerifyResult verify_certificate(const Pair& p1, const Pair& p2, const Certificate& cert);

struct InducedBeta {
    bool ok = false;
    LinearMap beta;
    std::string reason;  // set when !ok
};

// beta is forced on the spanning set {C1(basis pairs)}; returns it iff the
// system is consistent, determined on all of [m,q]_Lie, and invertible.
InducedBeta induced_beta(const Pair& p1, const Pair& p2, const LinearMap& alpha);

// Isomorphism-invariant dimension data; disagreement certifies
// non-isomorphism (and quotient/commutator entries gate isoclinism search).
struct Fingerprint {
    size_t dim_q, dim_m, dim_z, dim_k, dim_leib, dim_center;
    std::vector<size_t> lower_central;  // first 4 terms
    std::vector<size_t> derived;        // first 4 terms
    size_t dim_left_ann, dim_right_ann;

    bool operator==(const Fingerprint&) const = default;
    std::string str() const;
};

Fingerprint fingerprint(const Pair& p);

enum class SearchStatus { Found, NotIsoclinic, Inconclusive };

struct SearchResult {
    SearchStatus status = SearchStatus::Inconclusive;
    Certificate cert;   // when Found
    std::string reason;
    size_t nodes = 0;   // basis images assigned
};

// Backtracking over alpha with bracket constraints (Strict), beta always
// induced.  Exhaustive over finite fields; over Q the coefficient set is
// the fixed {0, +-1, +-2, +-1/2} and failure is only Inconclusive.
SearchResult search_isoclinism(const Pair& p1, const Pair& p2, size_t budget);

enum class IsoSearchStatus { Found, NotIsomorphic, Inconclusive };

struct IsoSearchResult {
    IsoSearchStatus status = IsoSearchStatus::Inconclusive;
    LinearMap phi;      // q1 -> q2 with phi(m1) = m2, when Found
    std::string reason;
    size_t nodes = 0;
};

// Same backtracking on the full algebras: a pair-isomorphism search.
// use_fingerprint short-circuits on invariant mismatch before searching.
IsoSearchResult search_pair_isomorphism(const Pair& p1, const Pair& p2, size_t budget,
                                        bool use_fingerprint = true);

struct QuotientIsoclinism {
    Pair p_bar;    // (m/n, q/n)
    Pair p_tilde;  // (m/(n cap K), q/(n cap K))
    Certificate cert;  // for (p_tilde, p_bar); verifies in Strict mode
};

QuotientIsoclinism quotient_isoclinism(const Pair& p, const Subspace& n);

struct StemReduction {
    Pair reduced;
    IdealHandle s;
    Certificate cert;  // for (input, reduced)
};

// Quotient by a maximal two-sided ideal s <= m with s cap [m,q]_Lie = 0.
// Exhaustive over GF(p) when dim Z <= 6 (deterministic tie-break:
// lexicographically least RREF basis); documented greedy heuristic over Q,
// which throws StemReductionIncomplete instead of returning a wrong answer.
StemReduction stem_reduce(const Pair& p);

struct Corollary2Result {
    bool ok = false;
    LinearMap restriction;  // Z_Lie(p1) coords -> Z_Lie(p2) coords
};

Corollary2Result corollary2_check(const Pair& p1, const Pair& p2, const Certificate& cert);

struct Corollary1Result {
    Pair pm1, pm2;       // the full pairs (m1, m1), (m2, m2) on subalgebra coords
    Certificate cert;    // restricted certificate
    SubalgebraResult m1_alg, m2_alg;
};

// From a pair certificate, the induced certificate between the full pairs
// on the ideals themselves.
Corollary1Result corollary1_restrict(const Pair& p1, const Pair& p2, const Certificate& cert);

enum class Theorem3Status { Iso, ConditionFailedA, ConditionFailedB, VerificationFailed };

struct Theorem3Result {
    Theorem3Status status = Theorem3Status::VerificationFailed;
    LinearMap lambda;        // mf -> ng coordinates
    LinearMap m_iso;         // m1 subalgebra coords -> m2 subalgebra coords
    ExtensionAlgebra mf, ng;
    EpsilonReport eps;
    std::string detail;
};

// The constructive isomorphism m1 ~= m2 for isoclinic pairs whose ideals are
// stem algebras satisfying the epsilon-commutativity condition.  lambda is
// verified by an unconditional hom check regardless of the epsilon mode.
Theorem3Result theorem3_construct(const Pair& p1, const Pair& p2, const Certificate& cert,
                                  EpsilonMode eps_mode = EpsilonMode::AllElements);

}  // namespace lzb

#endif
