#ifndef NSRING_DEGREES_HPP_
#define NSRING_DEGREES_HPP_

#include "nsring/ideal.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

// The canonical ideal K(H) = {z : F - z not in H}, normalized with min 0 and
// conductor F + 1. For the DVR this is H itself.
RelativeIdeal canonical_ideal(NumericalSemigroup const& h);

// K translated by the least shift s with K + s inside H. The principal ideal
// (s) is a minimal reduction of the embedded copy, and e0 = s.
struct CanonicalEmbedding {
  RelativeIdeal inside;
  Int shift;
  Int e0;
};
CanonicalEmbedding embed_canonical(NumericalSemigroup const& h);

// cdeg = lambda(K/H) = e0(C) - lambda(R/C); both routes are computed and must
// agree (InternalInconsistency otherwise). Zero iff Gorenstein.
Int cdeg(NumericalSemigroup const& h);

// bideg = lambda(K**/K). Zero iff Gorenstein.
Int bideg(NumericalSemigroup const& h);

// tdeg = lambda(H/trace(K)); equals bideg in dimension one, and the two
// independent routes are asserted equal.
Int tdeg(NumericalSemigroup const& h);

// Reduction number of the canonical ideal: least n with K^{n+1} = K^n.
// Zero iff Gorenstein; never 1.
Int canonical_index(NumericalSemigroup const& h);

// e1 = sum over j < rho of lambda(K^{j+1}/K^j); s0 = e1 - cdeg.
struct HilbertData {
  Int e1;
  Int s0;
};
HilbertData e1_and_s0(NumericalSemigroup const& h);

struct DegreeFlags {
  bool gorenstein;
  bool almost_gorenstein;  // cdeg = type - 1
  bool nearly_gorenstein;  // tdeg = 1
  bool goto_ring;          // bideg = 1
  bool dvr;
};
DegreeFlags classify(NumericalSemigroup const& h);

// True iff E is a canonical ideal, i.e. isomorphic to K(H). Cross-checked
// against the socle criterion lambda((E:M)/E) = 1 together with E:E = H.
bool is_canonical(NumericalSemigroup const& h, RelativeIdeal const& e);

// The full invariant vector of one semigroup.
struct DegreeReport {
  Int type;
  Int cdeg;
  Int bideg;
  Int tdeg;
  Int rho;
  Int e1;
  Int s0;
  Int e0_of_c;
  Int lambda_r_mod_c;
  DegreeFlags flags;
  bool conjecture_ok;  // cdeg >= bideg, recorded per ring
};
DegreeReport degree_report(NumericalSemigroup const& h);

}  // namespace nsring

#endif  // NSRING_DEGREES_HPP_
