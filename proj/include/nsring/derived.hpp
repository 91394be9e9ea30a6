#ifndef NSRING_DERIVED_HPP_
#define NSRING_DERIVED_HPP_

#include "nsring/degrees.hpp"

namespace nsring {

// The semigroup of the endomorphism ring A = m:m, i.e. {z >= 0 : z + M in M}
// with M = H \ {0}. As a set this is H together with its pseudo-Frobenius
// numbers. The endo of the DVR is the DVR.
NumericalSemigroup endo_semigroup(NumericalSemigroup const& h);

// cdeg(A) = cdeg(R) + e0(m) - 2r, with residue degree 1 for semigroup rings.
// For the DVR both sides are reported as 0 (A = R and the formula's standing
// hypothesis excludes valuation rings).
struct TcdegIdentity {
  Int lhs;  // cdeg of the endo semigroup
  Int rhs;  // cdeg(H) + multiplicity(H) - 2 * type(H)
  bool ok;
};
TcdegIdentity tcdeg_identity(NumericalSemigroup const& h);

// Structural facts about A: its number of generators over R, whether M + K
// is the canonical class of A, and the reduction number of that class.
struct EndoChecks {
  Int nu_a;
  bool nu_ok;                  // nu(A) = type + 1 (trivially true on the DVR)
  bool canonical_of_endo_ok;   // M + K matches K of the endo semigroup
  Int red_d;                   // canonical index of the endo semigroup
};
EndoChecks endo_checks(NumericalSemigroup const& h);

// Predicted degrees of the augmented ring R x m, formula evaluation only;
// no independent check is in scope. Not applicable when H is Gorenstein
// (the formula assumes a non-Gorenstein input). Throws DvrInput.
struct IdealizationDegrees {
  Int bideg_pred;  // 2 bideg - 1
  Int cdeg_pred;   // 2 cdeg + 2
  bool applicable;
};
IdealizationDegrees idealization_degrees(NumericalSemigroup const& h);

// Predicted degrees of the product ring, deg = multiplicity; evaluation only.
struct ProductDegrees {
  Int cdeg_pred;
  Int bideg_pred;
};
ProductDegrees product_degrees(NumericalSemigroup const& h1, NumericalSemigroup const& h2);

}  // namespace nsring

#endif  // NSRING_DERIVED_HPP_
