#ifndef LZB_PAIRS_HPP
#define LZB_PAIRS_HPP

#include "algebra.hpp"

namespace lzb {

// A Leibniz algebra together with a two-sided ideal, plus the pair
// invariants, computed once at construction.
struct Pair {
    LeibnizAlgebra q;
    IdealHandle m;
    Subspace z_lie;      // Z_Lie(m, q) = { z in m : [z,x] + [x,z] = 0 for all x }
    IdealHandle k_lie;   // [m, q]_Lie = < [m,x] + [x,m] >

    bool full() const { return m.space.dim() == q.dim; }
};

// Validates the algebra state and the ideal, then computes the invariants.
Pair make_pair(const LeibnizAlgebra& q, const Subspace& m);
Pair make_full_pair(const LeibnizAlgebra& q);

// The two invariants, also callable standalone.
Subspace lie_center(const LeibnizAlgebra& q, const Subspace& m);
IdealHandle lie_commutator(const LeibnizAlgebra& q, const Subspace& m);

bool is_stem(const Pair& p);

// Two-sided center { z : [z,x] = 0 = [x,z] for all x }.
Subspace two_sided_center(const LeibnizAlgebra& q);

enum class EpsilonMode { BasisPairs, AllElements };

struct EpsilonWitness {
    Vector x, y;        // brackets [x,y], [y,x] are not parallel
    Vector bxy, byx;
};

struct EpsilonEntry {
    size_t i, j;        // basis pair, i <= j
    Scalar eps;         // [e_i, e_j] = eps [e_j, e_i], both sides nonzero
};

struct EpsilonReport {
    EpsilonMode mode = EpsilonMode::BasisPairs;
    bool pass = false;
    std::vector<EpsilonEntry> entries;      // BasisPairs mode
    std::optional<EpsilonWitness> witness;  // on failure, when one exists
    std::string detail;                     // non-witness failure description
};

// Checks whether every two elements bracket to parallel vectors in both
// orders.  BasisPairs tests basis vectors only; AllElements decides the
// two-variable polynomial identity exactly (all 2x2 minors of
// (B(x,y) | B(y,x)) vanish identically), never by sampling.
EpsilonReport epsilon_condition(const LeibnizAlgebra& alg, const Subspace& restrict_to,
                                EpsilonMode mode);

}  // namespace lzb

#endif
