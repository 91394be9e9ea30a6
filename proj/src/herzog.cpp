#include "nsring/herzog.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace nsring {

namespace {

// Least k >= 1 with k*x in the monoid generated by u and v, searched
// exhaustively below the x*u*v bound.
Int minimal_multiple(Int x, Int u, Int v) {
  for (Int k = 1; k * x <= x * u * v; ++k) {
    Int const target = k * x;
    for (Int i = 0; i * u <= target; ++i) {
      if ((target - i * u) % v == 0) {
        return k;
      }
    }
  }
  throw InternalInconsistency("no multiple of " + std::to_string(x) +
                              " lies in the monoid of the other generators");
}

// All ways to write target = p*u + q*v with p, q >= 1.
std::vector<std::pair<Int, Int>> positive_representations(Int target, Int u, Int v) {
  std::vector<std::pair<Int, Int>> out;
  for (Int p = 1; p * u + v <= target; ++p) {
    Int const rest = target - p * u;
    if (rest % v == 0) {
      out.emplace_back(p, rest / v);
    }
  }
  return out;
}

}  // namespace

HerzogData herzog_data(Int a, Int b, Int c) {
  std::vector<Int> gens{a, b, c};
  std::sort(gens.begin(), gens.end());
  NumericalSemigroup const h = NumericalSemigroup::from_generators(gens);
  if (h.generators() != gens || gens[0] == gens[1] || gens[1] == gens[2]) {
    throw NotThreeGenerated("<" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + "> is not minimally 3-generated");
  }
  if (h.is_symmetric()) {
    throw SymmetricInput();
  }
  a = gens[0];
  b = gens[1];
  c = gens[2];

  Int const ma = minimal_multiple(a, b, c);
  Int const mb = minimal_multiple(b, a, c);
  Int const mc = minimal_multiple(c, a, b);

  auto const reps_a = positive_representations(ma * a, b, c);  // (b1, c2)
  auto const reps_b = positive_representations(mb * b, a, c);  // (a2, c1)
  auto const reps_c = positive_representations(mc * c, a, b);  // (a1, b2)

  HerzogData data{a, b, c, {}, false};
  for (auto const& [b1, c2] : reps_a) {
    for (auto const& [a2, c1] : reps_b) {
      for (auto const& [a1, b2] : reps_c) {
        if (a1 + a2 != ma || b1 + b2 != mb || c1 + c2 != mc) {
          continue;
        }
        HerzogExponents const e{a1, a2, b1, b2, c1, c2};
        if ((e.a1 + e.a2) * a != e.b1 * b + e.c2 * c ||
            (e.b1 + e.b2) * b != e.a2 * a + e.c1 * c ||
            (e.c1 + e.c2) * c != e.a1 * a + e.b2 * b) {
          throw InternalInconsistency("Herzog relations fail by substitution");
        }
        data.solutions.push_back(e);
      }
    }
  }
  if (data.solutions.empty()) {
    throw InternalInconsistency("no consistent Herzog exponents for <" + std::to_string(a) +
                                "," + std::to_string(b) + "," + std::to_string(c) + ">");
  }
  std::sort(data.solutions.begin(), data.solutions.end());
  data.solutions.erase(std::unique(data.solutions.begin(), data.solutions.end()),
                       data.solutions.end());
  data.multiple_solutions = data.solutions.size() > 1;
  return data;
}

ClosedFormDegrees closed_form_degrees(Int a, Int b, Int c) {
  HerzogData data = herzog_data(a, b, c);
  HerzogExponents const& e = data.primary();
  NumericalSemigroup const h = NumericalSemigroup::from_generators({a, b, c});
  Int const cdeg_engine = cdeg(h);
  Int const bideg_engine = bideg(h);
  Int const cdeg_formula = e.a2 * e.b2 * e.c2;
  Int const bideg_formula = e.a1 * e.b2 * e.c2;
  return ClosedFormDegrees{std::move(data), cdeg_formula,       bideg_formula,
                           cdeg_engine,     bideg_engine,       cdeg_formula == cdeg_engine,
                           bideg_formula == bideg_engine};
}

HerzogSurvey herzog_survey(Int frobenius_max) {
  HerzogSurvey survey;
  // Minimal generators never exceed F + multiplicity, so c is bounded. The
  // genus never exceeds F, so the cap below exactly discards out-of-range
  // triples instead of overflowing the default construction limits.
  Limits limits;
  limits.max_genus = frobenius_max;
  Int const gen_max = 2 * frobenius_max + 2;
  for (Int a = 3; a <= frobenius_max + 1; ++a) {
    for (Int b = a + 1; b <= gen_max; ++b) {
      for (Int c = b + 1; c <= gen_max; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1) {
          continue;
        }
        std::optional<NumericalSemigroup> h;
        try {
          h = NumericalSemigroup::from_generators({a, b, c}, limits);
        } catch (LimitExceeded const&) {
          continue;  // genus > frobenius_max forces F > frobenius_max
        }
        if (h->generators() != std::vector<Int>{a, b, c} || h->is_symmetric() ||
            h->frobenius() > frobenius_max) {
          continue;
        }
        ClosedFormDegrees row = closed_form_degrees(a, b, c);
        if (row.cdeg_match) {
          ++survey.cdeg_matches;
        }
        if (row.bideg_match) {
          ++survey.bideg_matches;
        }
        HerzogExponents const& e = row.data.primary();
        if (e.a1 <= e.a2) {
          ++survey.rows_with_a1_le_a2;
          if (row.bideg_match) {
            ++survey.bideg_matches_with_a1_le_a2;
          }
        }
        survey.rows.push_back(std::move(row));
      }
    }
  }
  return survey;
}

}  // namespace nsring
