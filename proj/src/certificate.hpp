#ifndef LZB_CERTIFICATE_HPP
#define LZB_CERTIFICATE_HPP

#include "linalg.hpp"

namespace lzb {

// Strict: alpha must be an algebra isomorphism of the central quotients.
// Linear: alpha only a linear bijection making the diagram commute.  Both
// readings are supported because the defining text leaves alpha's
// multiplicativity open and the worked examples disagree.
enum class CertMode { Strict, Linear };

// Explicit witness for a Lie-isoclinism: alpha acts on q1/Z1 -> q2/Z2
// coordinates (deterministic complement bases), beta on the RREF bases of
// the Lie-commutators.
struct Certificate {
    LinearMap alpha;
    LinearMap beta;
    CertMode mode = CertMode::Strict;
};

}  // namespace lzb

#endif
