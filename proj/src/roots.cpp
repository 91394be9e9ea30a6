#include "nsring/roots.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace nsring {

bool is_root(NumericalSemigroup const& h, RelativeIdeal const& l, Int n) {
  return same_values_up_to_shift(power(l, n), canonical_ideal(h));
}

Int reduction_number(RelativeIdeal const& l) {
  RelativeIdeal prev = RelativeIdeal::unit(l.ambient());
  RelativeIdeal const base = normalize(l);
  Int const limit = l.ambient().multiplicity() + l.ambient().genus() + 2;
  for (Int n = 0; n <= limit; ++n) {
    RelativeIdeal next = multiply(prev, base);
    if (next == prev) {
      return n;
    }
    prev = std::move(next);
  }
  throw InternalInconsistency("ideal powers did not stabilize");
}

std::vector<RootWitness> rootset(NumericalSemigroup const& h, Int max_genus_guard) {
  if (h.is_symmetric()) {
    throw GorensteinInput();
  }
  Int const genus = h.genus();
  if (genus > max_genus_guard) {
    throw GenusGuardExceeded(genus, max_genus_guard);
  }
  RelativeIdeal const k = canonical_ideal(h);
  Int const r = h.type();
  std::vector<Int> const& gaps = h.gaps();

  // Key = (conductor, sporadic values): dedupes subsets generating one ideal.
  std::set<std::pair<Int, std::vector<Int>>> seen;
  std::vector<std::pair<Int, RelativeIdeal>> hits;  // (tau, witness)
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << genus); ++mask) {
    std::vector<Int> gens{0};
    for (Int i = 0; i < genus; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        gens.push_back(gaps[static_cast<size_t>(i)]);
      }
    }
    RelativeIdeal l = RelativeIdeal::from_generators(h, gens);
    if (!seen.emplace(l.conductor(), l.small_values()).second) {
      continue;
    }
    RelativeIdeal pow = RelativeIdeal::unit(h);
    for (Int n = 1; n <= r - 1; ++n) {
      pow = multiply(pow, l);
      if (same_values_up_to_shift(pow, k)) {
        hits.emplace_back(n, l);
        break;  // tau is minimal; no L has a second exponent
      }
    }
  }
  std::sort(hits.begin(), hits.end(),
            [](auto const& a, auto const& b) {
              if (a.first != b.first) {
                return a.first < b.first;
              }
              if (a.second.small_values() != b.second.small_values()) {
                return a.second.small_values() < b.second.small_values();
              }
              return a.second.conductor() < b.second.conductor();
            });
  std::vector<RootWitness> out;
  for (auto const& [tau, l] : hits) {
    if (!out.empty() && out.back().exponent == tau) {
      continue;
    }
    Int const red = reduction_number(l);
    if (!is_closed(l)) {
      throw InternalInconsistency("root witness is not closed over " + h.to_string());
    }
    if (tau > std::min(r - 1, red)) {
      throw InternalInconsistency("root exponent exceeds min{type-1, red(L)} over " +
                                  h.to_string());
    }
    out.push_back(RootWitness{tau, l, red});
  }
  if (static_cast<Int>(out.size()) >= r) {
    throw InternalInconsistency("rootset of " + h.to_string() +
                                " is not smaller than the type");
  }
  return out;
}

std::vector<RhoBound> rho_bound_from_root(NumericalSemigroup const& h,
                                          RootWitness const& witness) {
  Int const rho = canonical_index(h);
  Int const n = witness.exponent;
  std::vector<RhoBound> out;
  for (Int p = 1; p <= n; ++p) {
    if (n % p != 0) {
      continue;
    }
    // I = L^{n/p} satisfies I^p = K; red(I) caps rho via p equal steps.
    Int const f = reduction_number(power(witness.witness, n / p));
    Int const bound = (f + p - 1) / p;
    out.push_back(RhoBound{p, f, bound, rho <= bound});
  }
  return out;
}

}  // namespace nsring
