#include "nsring/enumerate.hpp"

#include <algorithm>

namespace nsring {

std::vector<NumericalSemigroup> enumerate_semigroups(Int max_genus, Int hard_cap) {
  if (max_genus < 0) {
    throw Error("max_genus must be non-negative");
  }
  if (max_genus > hard_cap) {
    throw GuardExceeded(max_genus, hard_cap);
  }
  std::vector<NumericalSemigroup> out;
  std::vector<NumericalSemigroup> level{NumericalSemigroup::from_gaps({})};
  for (Int g = 0; g <= max_genus; ++g) {
    std::sort(level.begin(), level.end(),
              [](NumericalSemigroup const& a, NumericalSemigroup const& b) {
                return a.gaps() < b.gaps();
              });
    for (NumericalSemigroup const& h : level) {
      out.push_back(h);
    }
    if (g == max_genus) {
      break;
    }
    std::vector<NumericalSemigroup> next;
    for (NumericalSemigroup const& h : level) {
      for (Int gen : h.generators()) {
        if (gen <= h.frobenius()) {
          continue;
        }
        std::vector<Int> gaps = h.gaps();
        gaps.push_back(gen);
        next.push_back(NumericalSemigroup::from_gaps(gaps));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<Int> count_by_genus(Int max_genus, Int hard_cap) {
  std::vector<Int> counts(static_cast<size_t>(max_genus) + 1, 0);
  for (NumericalSemigroup const& h : enumerate_semigroups(max_genus, hard_cap)) {
    ++counts[static_cast<size_t>(h.genus())];
  }
  return counts;
}

}  // namespace nsring
