#ifndef NSRING_SEMIGROUP_HPP_
#define NSRING_SEMIGROUP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "nsring/errors.hpp"

namespace nsring {

using Int = std::int64_t;

// Construction caps. All arithmetic stays inside machine words below these.
struct Limits {
  Int max_generator = 1'000'000;
  Int max_genus = 64;
};

// A numerical semigroup H = <a_1, ..., a_q>, gcd = 1: the value semigroup of
// the monomial ring k[[t^h : h in H]]. Immutable after construction; safe to
// share across threads.
//
// Membership below the conductor is a bit table, so contains() is O(1).
class NumericalSemigroup {
 public:
  // Builds H from any generating set (redundant generators are dropped).
  // Throws EmptyInput, GcdNotOne, LimitExceeded.
  static NumericalSemigroup from_generators(std::vector<Int> const& gens,
                                            Limits const& limits = {});

  // Builds H from its gap set (the complement must be closed under addition;
  // throws Error if not). The empty gap set gives the DVR.
  static NumericalSemigroup from_gaps(std::vector<Int> const& gaps,
                                      Limits const& limits = {});

  bool contains(Int z) const noexcept {
    if (z < 0) {
      return false;
    }
    if (z >= conductor_) {
      return true;
    }
    return member_[static_cast<size_t>(z)];
  }

  std::vector<Int> const& generators() const noexcept { return gens_; }
  std::vector<Int> const& gaps() const noexcept { return gaps_; }
  Int frobenius() const noexcept { return frobenius_; }  // -1 for the DVR
  Int conductor() const noexcept { return conductor_; }
  Int genus() const noexcept { return static_cast<Int>(gaps_.size()); }
  Int multiplicity() const noexcept { return gens_.front(); }
  bool is_dvr() const noexcept { return gaps_.empty(); }

  // Symmetric <=> genus = (F+1)/2 <=> the ring is Gorenstein.
  bool is_symmetric() const noexcept { return 2 * genus() == conductor_; }

  // Least member of H in each residue class mod n; exactly n elements.
  // Throws NotAMember unless n is a positive member.
  std::vector<Int> apery_set(Int n) const;

  // {z not in H : z + h in H for every nonzero h in H}; {-1} for the DVR.
  std::vector<Int> const& pseudo_frobenius() const noexcept { return pf_; }
  Int type() const noexcept { return static_cast<Int>(pf_.size()); }

  bool operator==(NumericalSemigroup const& other) const noexcept {
    return gens_ == other.gens_;
  }
  bool operator!=(NumericalSemigroup const& other) const noexcept {
    return !(*this == other);
  }

  std::string to_string() const;

 private:
  NumericalSemigroup() = default;
  static NumericalSemigroup from_member_table(std::vector<bool> member, Int frobenius);

  std::vector<Int> gens_;   // minimal generators, sorted
  std::vector<Int> gaps_;   // sorted
  std::vector<Int> pf_;     // pseudo-Frobenius numbers, sorted; {-1} for DVR
  Int frobenius_ = -1;
  Int conductor_ = 0;
  std::vector<bool> member_;  // membership on [0, conductor)
};

}  // namespace nsring

#endif  // NSRING_SEMIGROUP_HPP_
