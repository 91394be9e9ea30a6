#include "nsring/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace nsring {

namespace {

void require_same_ambient(RelativeIdeal const& e, RelativeIdeal const& f) {
  if (!e.same_ambient(f)) {
    throw AmbientMismatch();
  }
}

}  // namespace

RelativeIdeal RelativeIdeal::from_values(NumericalSemigroup const& h, std::vector<Int> values,
                                         Int conductor_bound) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Int cond = conductor_bound;
  while (!values.empty() && values.back() >= cond - 1) {
    if (values.back() == cond - 1) {
      --cond;
    }
    values.pop_back();
  }
  return RelativeIdeal(h, std::move(values), cond);
}

RelativeIdeal RelativeIdeal::from_generators(NumericalSemigroup const& h,
                                             std::vector<Int> const& gens) {
  if (gens.empty()) {
    throw EmptyGenerators();
  }
  Int const lo = *std::min_element(gens.begin(), gens.end());
  Int const bound = lo + h.conductor();
  std::vector<Int> values;
  for (Int z = lo; z < bound; ++z) {
    for (Int g : gens) {
      if (h.contains(z - g)) {
        values.push_back(z);
        break;
      }
    }
  }
  return from_values(h, std::move(values), bound);
}

RelativeIdeal RelativeIdeal::unit(NumericalSemigroup const& h) {
  return from_generators(h, {0});
}

RelativeIdeal RelativeIdeal::maximal_ideal(NumericalSemigroup const& h) {
  if (h.is_dvr()) {
    return from_generators(h, {1});
  }
  return from_generators(h, h.generators());
}

bool RelativeIdeal::contains(Int z) const noexcept {
  if (z >= conductor_) {
    return true;
  }
  return std::binary_search(small_.begin(), small_.end(), z);
}

std::vector<Int> RelativeIdeal::values_in(Int lo, Int hi) const {
  std::vector<Int> out;
  for (Int v : small_) {
    if (v >= lo && v <= hi) {
      out.push_back(v);
    }
  }
  for (Int z = std::max(lo, conductor_); z <= hi; ++z) {
    out.push_back(z);
  }
  return out;
}

std::string RelativeIdeal::to_string() const {
  std::ostringstream os;
  if (!small_.empty()) {
    os << '{';
    for (size_t i = 0; i < small_.size(); ++i) {
      if (i > 0) {
        os << ',';
      }
      os << small_[i];
    }
    os << "} ∪ ";
  }
  os << '[' << conductor_ << ",∞)";
  return os.str();
}

RelativeIdeal multiply(RelativeIdeal const& e, RelativeIdeal const& f) {
  require_same_ambient(e, f);
  Int const me = e.min_value();
  Int const mf = f.min_value();
  Int const bound = std::min(e.conductor() + mf, f.conductor() + me);
  // Any product value below the bound is a sum of values below the two
  // conductors, so the finite windows are exhaustive.
  std::vector<Int> const ev = e.values_in(me, bound - mf);
  std::vector<Int> const fv = f.values_in(mf, bound - me);
  std::vector<Int> values;
  for (Int a : ev) {
    for (Int b : fv) {
      if (a + b < bound) {
        values.push_back(a + b);
      }
    }
  }
  return RelativeIdeal::from_values(e.ambient(), std::move(values), bound);
}

RelativeIdeal power(RelativeIdeal const& e, Int n) {
  if (n < 0) {
    throw Error("negative ideal power");
  }
  RelativeIdeal acc = RelativeIdeal::unit(e.ambient());
  for (Int i = 0; i < n; ++i) {
    acc = multiply(acc, e);
  }
  return acc;
}

RelativeIdeal colon(RelativeIdeal const& e, RelativeIdeal const& f) {
  require_same_ambient(e, f);
  std::vector<Int> const fgens = minimal_generators(f);
  Int const lo = e.min_value() - f.min_value();
  Int const bound = e.conductor() - f.min_value();
  std::vector<Int> values;
  for (Int z = lo; z < bound; ++z) {
    bool ok = true;
    for (Int g : fgens) {
      if (!e.contains(z + g)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      values.push_back(z);
    }
  }
  return RelativeIdeal::from_values(e.ambient(), std::move(values), bound);
}

RelativeIdeal bidual(RelativeIdeal const& e) {
  RelativeIdeal const h = RelativeIdeal::unit(e.ambient());
  return colon(h, colon(h, e));
}

RelativeIdeal trace(RelativeIdeal const& e) {
  return multiply(e, colon(RelativeIdeal::unit(e.ambient()), e));
}

Int length_between(RelativeIdeal const& e, RelativeIdeal const& f) {
  require_same_ambient(e, f);
  Int const hi = std::max(e.conductor(), f.conductor());
  for (Int v : f.values_in(f.min_value(), hi)) {
    if (!e.contains(v)) {
      throw NotNested();
    }
  }
  Int count = 0;
  for (Int v : e.values_in(e.min_value(), hi - 1)) {
    if (!f.contains(v)) {
      ++count;
    }
  }
  return count;
}

std::vector<Int> minimal_generators(RelativeIdeal const& e) {
  // E \ (M + E); v - g lands in E for some semigroup generator g iff v is in
  // M + E. Everything at conductor + multiplicity or above is decomposable.
  NumericalSemigroup const& h = e.ambient();
  Int const hi = e.conductor() + h.multiplicity() - 1;
  std::vector<Int> out;
  for (Int v : e.values_in(e.min_value(), hi)) {
    bool decomposable = false;
    for (Int g : h.generators()) {
      if (e.contains(v - g)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) {
      out.push_back(v);
    }
  }
  return out;
}

Int nu(RelativeIdeal const& e) { return static_cast<Int>(minimal_generators(e).size()); }

RelativeIdeal shift(RelativeIdeal const& e, Int z) {
  std::vector<Int> values(e.small_values());
  for (Int& v : values) {
    v += z;
  }
  return RelativeIdeal::from_values(e.ambient(), std::move(values), e.conductor() + z);
}

RelativeIdeal normalize(RelativeIdeal const& e) { return shift(e, -e.min_value()); }

bool is_isomorphic(RelativeIdeal const& e, RelativeIdeal const& f) {
  require_same_ambient(e, f);
  return normalize(e) == normalize(f);
}

bool is_closed(RelativeIdeal const& e) {
  return colon(e, e) == RelativeIdeal::unit(e.ambient());
}

bool is_reflexive(RelativeIdeal const& e) { return bidual(e) == e; }

bool is_principal(RelativeIdeal const& e) { return nu(e) == 1; }

bool same_values_up_to_shift(RelativeIdeal const& e, RelativeIdeal const& f) {
  RelativeIdeal const en = normalize(e);
  RelativeIdeal const fn = normalize(f);
  return en.conductor() == fn.conductor() && en.small_values() == fn.small_values();
}

}  // namespace nsring
