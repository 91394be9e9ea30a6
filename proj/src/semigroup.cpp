#include "nsring/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nsring {

namespace {

// Window that is guaranteed to expose the conductor whenever the genus is
// within the cap: with at most max_genus gaps in [1, B] there is a run of
// max_genus + 2 consecutive members, which is longer than the multiplicity.
Int sieve_window(Int max_genus) { return (max_genus + 1) * (max_genus + 2); }

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> const& raw,
                                                       Limits const& limits) {
  if (raw.empty()) {
    throw EmptyInput();
  }
  std::vector<Int> gens(raw);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() <= 0) {
    throw Error("generators must be positive");
  }
  if (gens.back() > limits.max_generator) {
    throw LimitExceeded("generator " + std::to_string(gens.back()) + " exceeds the cap " +
                        std::to_string(limits.max_generator));
  }
  Int g = 0;
  for (Int a : gens) {
    g = std::gcd(g, a);
  }
  if (g != 1) {
    throw GcdNotOne(g);
  }

  Int const window = sieve_window(limits.max_genus);
  std::vector<bool> member(static_cast<size_t>(window) + 1, false);
  member[0] = true;
  for (Int z = 1; z <= window; ++z) {
    for (Int a : gens) {
      if (a > z) {
        break;
      }
      if (member[static_cast<size_t>(z - a)]) {
        member[static_cast<size_t>(z)] = true;
        break;
      }
    }
  }
  // Generators above the window play no role below it, so the table is exact
  // there; a genus within the cap forces every gap below the window.
  Int genus = 0;
  Int frobenius = -1;
  for (Int z = 1; z <= window; ++z) {
    if (!member[static_cast<size_t>(z)]) {
      ++genus;
      frobenius = z;
    }
  }
  if (genus > limits.max_genus) {
    throw LimitExceeded("genus exceeds the cap " + std::to_string(limits.max_genus));
  }
  member.resize(static_cast<size_t>(frobenius + 1));
  return from_member_table(std::move(member), frobenius);
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<Int> const& raw,
                                                 Limits const& limits) {
  std::vector<Int> gaps(raw);
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  if (static_cast<Int>(gaps.size()) > limits.max_genus) {
    throw LimitExceeded("genus exceeds the cap " + std::to_string(limits.max_genus));
  }
  if (!gaps.empty() && gaps.front() <= 0) {
    throw Error("gaps must be positive");
  }
  Int const frobenius = gaps.empty() ? -1 : gaps.back();
  std::vector<bool> member(static_cast<size_t>(frobenius + 1), true);
  for (Int z : gaps) {
    member[static_cast<size_t>(z)] = false;
  }
  // Closure of the complement: a member sum may never land on a gap.
  for (Int a = 1; a <= frobenius; ++a) {
    if (!member[static_cast<size_t>(a)]) {
      continue;
    }
    for (Int b = a; a + b <= frobenius; ++b) {
      if (member[static_cast<size_t>(b)] && !member[static_cast<size_t>(a + b)]) {
        throw Error("gap set is not the complement of a semigroup: " + std::to_string(a) +
                    " + " + std::to_string(b) + " = " + std::to_string(a + b));
      }
    }
  }
  return from_member_table(std::move(member), frobenius);
}

NumericalSemigroup NumericalSemigroup::from_member_table(std::vector<bool> member,
                                                         Int frobenius) {
  NumericalSemigroup h;
  h.frobenius_ = frobenius;
  h.conductor_ = frobenius + 1;
  h.member_ = std::move(member);
  for (Int z = 1; z <= frobenius; ++z) {
    if (!h.member_[static_cast<size_t>(z)]) {
      h.gaps_.push_back(z);
    }
  }
  if (h.gaps_.empty()) {
    h.gens_ = {1};
    h.pf_ = {-1};
    return h;
  }
  // Minimal generators = nonzero members not a sum of two nonzero members;
  // all of them lie below conductor + multiplicity.
  Int mult = 0;
  for (Int z = 1;; ++z) {
    if (h.contains(z)) {
      mult = z;
      break;
    }
  }
  for (Int z = mult; z < h.conductor_ + mult; ++z) {
    if (!h.contains(z)) {
      continue;
    }
    bool decomposable = false;
    for (Int a = mult; a <= z - mult; ++a) {
      if (h.contains(a) && h.contains(z - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) {
      h.gens_.push_back(z);
    }
  }
  // z is pseudo-Frobenius iff z + g is a member for every minimal generator.
  for (Int z : h.gaps_) {
    bool ok = true;
    for (Int g : h.gens_) {
      if (!h.contains(z + g)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      h.pf_.push_back(z);
    }
  }
  return h;
}

std::vector<Int> NumericalSemigroup::apery_set(Int n) const {
  if (n <= 0 || !contains(n)) {
    throw NotAMember(n);
  }
  std::vector<Int> out(static_cast<size_t>(n), -1);
  Int found = 0;
  for (Int z = 0; found < n; ++z) {
    if (!contains(z)) {
      continue;
    }
    Int const r = z % n;
    if (out[static_cast<size_t>(r)] < 0) {
      out[static_cast<size_t>(r)] = z;
      ++found;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) {
      os << ',';
    }
    os << gens_[i];
  }
  os << '>';
  return os.str();
}

}  // namespace nsring
