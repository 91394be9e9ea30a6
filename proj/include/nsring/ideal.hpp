#ifndef NSRING_IDEAL_HPP_
#define NSRING_IDEAL_HPP_

#include <string>
#include <vector>

#include "nsring/semigroup.hpp"

namespace nsring {

// A relative ideal of H: a set E of integers with E + H contained in E,
// bounded below and cofinite above. This is the value set of a monomial
// fractional ideal of k[[H]]; negative values are first-class.
//
// Canonical storage: the sorted sporadic values in [min, conductor) plus the
// conductor c_E with [c_E, oo) in E and c_E - 1 not in E. Two ideals are equal
// iff they are the same set. The ambient semigroup is held by pointer and must
// outlive the ideal.
class RelativeIdeal {
 public:
  // E = union of (g + H) over the given shifts. Throws EmptyGenerators.
  static RelativeIdeal from_generators(NumericalSemigroup const& h,
                                       std::vector<Int> const& gens);

  // H itself as an ideal (the unit for multiplication).
  static RelativeIdeal unit(NumericalSemigroup const& h);

  // The maximal ideal M = H \ {0}.
  static RelativeIdeal maximal_ideal(NumericalSemigroup const& h);

  // From an explicit value window: values are the members in [lo, cond) and
  // [cond, oo) is contained in E. Trims the conductor to its minimal value.
  static RelativeIdeal from_values(NumericalSemigroup const& h, std::vector<Int> values,
                                   Int conductor_bound);

  NumericalSemigroup const& ambient() const noexcept { return *ambient_; }

  bool contains(Int z) const noexcept;
  Int min_value() const noexcept { return small_.empty() ? conductor_ : small_.front(); }
  Int conductor() const noexcept { return conductor_; }
  std::vector<Int> const& small_values() const noexcept { return small_; }

  // Members of E in [lo, hi], in increasing order.
  std::vector<Int> values_in(Int lo, Int hi) const;

  bool operator==(RelativeIdeal const& other) const noexcept {
    return conductor_ == other.conductor_ && small_ == other.small_ &&
           same_ambient(other);
  }
  bool operator!=(RelativeIdeal const& other) const noexcept { return !(*this == other); }

  bool same_ambient(RelativeIdeal const& other) const noexcept {
    return ambient_ == other.ambient_ || *ambient_ == *other.ambient_;
  }

  // Prints "{v1,v2,...} u [c,oo)" using the mathematical union glyph.
  std::string to_string() const;

 private:
  RelativeIdeal(NumericalSemigroup const& h, std::vector<Int> small, Int conductor)
      : ambient_(&h), small_(std::move(small)), conductor_(conductor) {}

  NumericalSemigroup const* ambient_;
  std::vector<Int> small_;
  Int conductor_;
};

// Value-set sum {e + f}: the product of the monomial ideals.
// Throws AmbientMismatch.
RelativeIdeal multiply(RelativeIdeal const& e, RelativeIdeal const& f);

// E^n; power(E, 0) = H.
RelativeIdeal power(RelativeIdeal const& e, Int n);

// The quotient E - F = {z : z + F in E}, i.e. Hom(F, E). Throws AmbientMismatch.
RelativeIdeal colon(RelativeIdeal const& e, RelativeIdeal const& f);

// E** = H - (H - E).
RelativeIdeal bidual(RelativeIdeal const& e);

// trace(E) = E * (H - E), always an ideal inside H.
RelativeIdeal trace(RelativeIdeal const& e);

// lambda(E/F) for F inside E. Throws NotNested, AmbientMismatch.
Int length_between(RelativeIdeal const& e, RelativeIdeal const& f);

// The unique minimal monomial generating set E \ (M + E), and its size.
std::vector<Int> minimal_generators(RelativeIdeal const& e);
Int nu(RelativeIdeal const& e);

RelativeIdeal shift(RelativeIdeal const& e, Int z);
RelativeIdeal normalize(RelativeIdeal const& e);

// Monomial fractional ideals are isomorphic iff they differ by a translation.
bool is_isomorphic(RelativeIdeal const& e, RelativeIdeal const& f);

bool is_closed(RelativeIdeal const& e);     // colon(E, E) = H
bool is_reflexive(RelativeIdeal const& e);  // bidual(E) = E
bool is_principal(RelativeIdeal const& e);  // nu(E) = 1

// Equality of the underlying value sets after normalization, ignoring the
// ambient semigroup. Used to compare ideals living over different rings.
bool same_values_up_to_shift(RelativeIdeal const& e, RelativeIdeal const& f);

}  // namespace nsring

#endif  // NSRING_IDEAL_HPP_
