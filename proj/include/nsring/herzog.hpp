#ifndef NSRING_HERZOG_HPP_
#define NSRING_HERZOG_HPP_

#include <tuple>
#include <vector>

#include "nsring/degrees.hpp"

namespace nsring {

// Exponents of the Herzog matrix
//   [ x^a1  z^c2 ]
//   [ z^c1  y^b2 ]
//   [ y^b1  x^a2 ]
// whose 2x2 minors present the non-symmetric 3-generated semigroup ring.
// The relations, in t-degrees:
//   (a1+a2) a = b1 b + c2 c,  (b1+b2) b = a2 a + c1 c,  (c1+c2) c = a1 a + b2 b,
// where a1+a2, b1+b2, c1+c2 are the minimal multiples of a, b, c landing in
// the monoid generated by the other two generators.
struct HerzogExponents {
  Int a1, a2, b1, b2, c1, c2;
  bool operator==(HerzogExponents const&) const = default;
  bool operator<(HerzogExponents const& o) const {
    return std::tie(a1, a2, b1, b2, c1, c2) < std::tie(o.a1, o.a2, o.b1, o.b2, o.c1, o.c2);
  }
};

struct HerzogData {
  Int a, b, c;
  std::vector<HerzogExponents> solutions;  // all consistent labelings, sorted
  bool multiple_solutions;
  HerzogExponents const& primary() const { return solutions.front(); }
};

// Throws NotThreeGenerated when <a,b,c> is not minimally 3-generated and
// SymmetricInput when the semigroup is symmetric.
HerzogData herzog_data(Int a, Int b, Int c);

// Evaluates the closed forms cdeg = a2 b2 c2 and bideg = a1 b2 c2 under the
// natural labeling and compares them against the value-set engine. The engine
// is the source of truth; the formulas are reported as hypotheses.
struct ClosedFormDegrees {
  HerzogData data;
  Int cdeg_formula;
  Int bideg_formula;
  Int cdeg_engine;
  Int bideg_engine;
  bool cdeg_match;
  bool bideg_match;
};
ClosedFormDegrees closed_form_degrees(Int a, Int b, Int c);

// Every minimally 3-generated non-symmetric semigroup with Frobenius number
// at most frobenius_max, with both formula verdicts.
struct HerzogSurvey {
  std::vector<ClosedFormDegrees> rows;
  Int cdeg_matches = 0;
  Int bideg_matches = 0;
  Int bideg_matches_with_a1_le_a2 = 0;
  Int rows_with_a1_le_a2 = 0;
};
HerzogSurvey herzog_survey(Int frobenius_max);

}  // namespace nsring

#endif  // NSRING_HERZOG_HPP_
