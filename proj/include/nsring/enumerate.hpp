#ifndef NSRING_ENUMERATE_HPP_
#define NSRING_ENUMERATE_HPP_

#include <vector>

#include "nsring/semigroup.hpp"

namespace nsring {

inline constexpr Int kMaxEnumerationGenus = 18;

// Every numerical semigroup of genus <= max_genus, each exactly once, in
// (genus, lexicographic gap tuple) order. Children in the genus tree are
// obtained by removing a minimal generator larger than the Frobenius number.
// Throws GuardExceeded above the hard cap.
std::vector<NumericalSemigroup> enumerate_semigroups(Int max_genus,
                                                     Int hard_cap = kMaxEnumerationGenus);

// Number of semigroups of each genus 0..max_genus.
std::vector<Int> count_by_genus(Int max_genus, Int hard_cap = kMaxEnumerationGenus);

}  // namespace nsring

#endif  // NSRING_ENUMERATE_HPP_
