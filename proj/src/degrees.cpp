#include "nsring/degrees.hpp"

#include <string>

namespace nsring {

RelativeIdeal canonical_ideal(NumericalSemigroup const& h) {
  if (h.is_dvr()) {
    return RelativeIdeal::unit(h);
  }
  Int const f = h.frobenius();
  std::vector<Int> values;
  for (Int z = 0; z <= f; ++z) {
    if (!h.contains(f - z)) {
      values.push_back(z);
    }
  }
  return RelativeIdeal::from_values(h, std::move(values), f + 1);
}

CanonicalEmbedding embed_canonical(NumericalSemigroup const& h) {
  RelativeIdeal const k = canonical_ideal(h);
  // s + K sits inside H exactly when every sporadic value lands in H; the
  // conductor ray is inside H for every s >= 0 since cond(K) = cond(H).
  Int s = 0;
  for (;; ++s) {
    if (!h.contains(s)) {
      continue;
    }
    bool ok = true;
    for (Int v : k.small_values()) {
      if (!h.contains(v + s)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      break;
    }
  }
  return CanonicalEmbedding{shift(k, s), s, s};
}

Int cdeg(NumericalSemigroup const& h) {
  RelativeIdeal const k = canonical_ideal(h);
  Int const direct = length_between(k, RelativeIdeal::unit(h));
  CanonicalEmbedding const emb = embed_canonical(h);
  Int const via_reduction =
      emb.e0 - length_between(RelativeIdeal::unit(h), emb.inside);
  if (direct != via_reduction) {
    throw InternalInconsistency("cdeg routes disagree on " + h.to_string() + ": " +
                                std::to_string(direct) + " vs " +
                                std::to_string(via_reduction));
  }
  return direct;
}

Int bideg(NumericalSemigroup const& h) {
  RelativeIdeal const k = canonical_ideal(h);
  return length_between(bidual(k), k);
}

Int tdeg(NumericalSemigroup const& h) {
  RelativeIdeal const k = canonical_ideal(h);
  Int const via_trace = length_between(RelativeIdeal::unit(h), trace(k));
  Int const via_bidual = bideg(h);
  if (via_trace != via_bidual) {
    throw InternalInconsistency("tdeg != bideg on " + h.to_string() + ": " +
                                std::to_string(via_trace) + " vs " +
                                std::to_string(via_bidual));
  }
  return via_trace;
}

Int canonical_index(NumericalSemigroup const& h) {
  RelativeIdeal const k = canonical_ideal(h);
  RelativeIdeal prev = RelativeIdeal::unit(h);
  // red(I) <= e0(m) - 1 in dimension one, so the walk is short.
  Int const limit = h.multiplicity() + 2;
  for (Int n = 0; n <= limit; ++n) {
    RelativeIdeal next = multiply(prev, k);
    if (next == prev) {
      return n;
    }
    prev = std::move(next);
  }
  throw InternalInconsistency("canonical powers of " + h.to_string() +
                              " did not stabilize below e0(m)");
}

HilbertData e1_and_s0(NumericalSemigroup const& h) {
  RelativeIdeal const k = canonical_ideal(h);
  RelativeIdeal prev = RelativeIdeal::unit(h);
  Int e1 = 0;
  Int const limit = h.multiplicity() + 2;
  for (Int n = 0; n <= limit; ++n) {
    RelativeIdeal next = multiply(prev, k);
    if (next == prev) {
      return HilbertData{e1, e1 - cdeg(h)};
    }
    e1 += length_between(next, prev);
    prev = std::move(next);
  }
  throw InternalInconsistency("canonical powers did not stabilize");
}

DegreeFlags classify(NumericalSemigroup const& h) {
  DegreeFlags flags{};
  flags.dvr = h.is_dvr();
  flags.gorenstein = h.is_symmetric();
  flags.almost_gorenstein = cdeg(h) == h.type() - 1;
  flags.nearly_gorenstein = tdeg(h) == 1;
  flags.goto_ring = bideg(h) == 1;
  return flags;
}

bool is_canonical(NumericalSemigroup const& h, RelativeIdeal const& e) {
  bool const iso = is_isomorphic(e, canonical_ideal(h));
  RelativeIdeal const m = RelativeIdeal::maximal_ideal(h);
  bool const socle = length_between(colon(e, m), e) == 1 &&
                     colon(e, e) == RelativeIdeal::unit(h);
  if (iso != socle) {
    throw InternalInconsistency("canonical-ideal recognition routes disagree on " +
                                h.to_string());
  }
  return iso;
}

DegreeReport degree_report(NumericalSemigroup const& h) {
  DegreeReport r{};
  r.type = h.type();
  r.cdeg = cdeg(h);
  r.bideg = bideg(h);
  r.tdeg = tdeg(h);
  r.rho = canonical_index(h);
  HilbertData const hd = e1_and_s0(h);
  r.e1 = hd.e1;
  r.s0 = hd.s0;
  CanonicalEmbedding const emb = embed_canonical(h);
  r.e0_of_c = emb.e0;
  r.lambda_r_mod_c = length_between(RelativeIdeal::unit(h), emb.inside);
  r.flags = classify(h);
  r.conjecture_ok = r.cdeg >= r.bideg;
  return r;
}

}  // namespace nsring
