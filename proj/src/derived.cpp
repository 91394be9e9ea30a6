#include "nsring/derived.hpp"

#include <algorithm>

namespace nsring {

NumericalSemigroup endo_semigroup(NumericalSemigroup const& h) {
  if (h.is_dvr()) {
    return h;
  }
  // Members of A are H plus the pseudo-Frobenius numbers, so the gaps of A
  // are the gaps of H that are not pseudo-Frobenius.
  std::vector<Int> gaps;
  for (Int z : h.gaps()) {
    if (!std::binary_search(h.pseudo_frobenius().begin(), h.pseudo_frobenius().end(), z)) {
      gaps.push_back(z);
    }
  }
  return NumericalSemigroup::from_gaps(gaps);
}

TcdegIdentity tcdeg_identity(NumericalSemigroup const& h) {
  if (h.is_dvr()) {
    return TcdegIdentity{0, 0, true};
  }
  Int const lhs = cdeg(endo_semigroup(h));
  Int const rhs = cdeg(h) + h.multiplicity() - 2 * h.type();
  return TcdegIdentity{lhs, rhs, lhs == rhs};
}

EndoChecks endo_checks(NumericalSemigroup const& h) {
  if (h.is_dvr()) {
    return EndoChecks{1, true, true, 0};
  }
  std::vector<Int> gens{0};
  for (Int z : h.pseudo_frobenius()) {
    gens.push_back(z);
  }
  RelativeIdeal const a = RelativeIdeal::from_generators(h, gens);
  Int const nu_a = nu(a);

  NumericalSemigroup const endo = endo_semigroup(h);
  RelativeIdeal const d = multiply(RelativeIdeal::maximal_ideal(h), canonical_ideal(h));
  bool const canonical_ok = same_values_up_to_shift(d, canonical_ideal(endo));

  return EndoChecks{nu_a, nu_a == h.type() + 1, canonical_ok, canonical_index(endo)};
}

IdealizationDegrees idealization_degrees(NumericalSemigroup const& h) {
  if (h.is_dvr()) {
    throw DvrInput();
  }
  Int const b = bideg(h);
  Int const c = cdeg(h);
  return IdealizationDegrees{2 * b - 1, 2 * c + 2, !h.is_symmetric()};
}

ProductDegrees product_degrees(NumericalSemigroup const& h1, NumericalSemigroup const& h2) {
  Int const c1 = cdeg(h1);
  Int const c2 = cdeg(h2);
  Int const b1 = bideg(h1);
  Int const b2 = bideg(h2);
  Int const d1 = h1.multiplicity();
  Int const d2 = h2.multiplicity();
  return ProductDegrees{c1 * d2 + d1 * c2, b1 * d2 + d1 * b2};
}

}  // namespace nsring
