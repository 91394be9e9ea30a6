#ifndef NSRING_ROOTS_HPP_
#define NSRING_ROOTS_HPP_

#include <vector>

#include "nsring/degrees.hpp"

namespace nsring {

// A minimal exponent tau with L^tau isomorphic to K(H), together with one
// witness L (normalized) and its reduction number.
struct RootWitness {
  Int exponent;
  RelativeIdeal witness;
  Int red_witness;
};

inline constexpr Int kDefaultRootGuard = 16;

// True iff normalize(L^n) = normalize(K).
bool is_root(NumericalSemigroup const& h, RelativeIdeal const& l, Int n);

// Reduction number of L by power stabilization of the normalized value set.
Int reduction_number(RelativeIdeal const& l);

// Enumerates every normalized non-principal monomial relative ideal
// L = H u (S + H), S a subset of the gaps, and collects the minimal root
// exponents. One witness per exponent, chosen smallest in (tau, value-set
// lexicographic) order. Postconditions checked: each witness is closed,
// tau <= min{type - 1, red(L)}, and |rootset| < type.
//
// Throws GorensteinInput (the rootset is unbounded) and GenusGuardExceeded
// (the search is 2^genus).
std::vector<RootWitness> rootset(NumericalSemigroup const& h,
                                 Int max_genus_guard = kDefaultRootGuard);

// The bound rho <= (f + p - 1)/p from a root witness, one row per divisor p
// of the exponent, with f = red(L^{n/p}).
struct RhoBound {
  Int divisor;
  Int f;
  Int bound;
  bool ok;  // rho(H) <= bound
};
std::vector<RhoBound> rho_bound_from_root(NumericalSemigroup const& h,
                                          RootWitness const& witness);

}  // namespace nsring

#endif  // NSRING_ROOTS_HPP_
