#include "nsring/derived.hpp"

#include <algorithm>

#include "doctest.h"
#include "nsring/enumerate.hpp"

using namespace nsring;

TEST_CASE("endo semigroup") {
  auto h579 = NumericalSemigroup::from_generators({5, 7, 9});
  auto endo = endo_semigroup(h579);
  CHECK(endo.generators() == std::vector<Int>{5, 7, 9, 11, 13});

  auto h345 = NumericalSemigroup::from_generators({3, 4, 5});
  CHECK(endo_semigroup(h345).is_dvr());

  auto dvr = NumericalSemigroup::from_generators({1});
  CHECK(endo_semigroup(dvr) == dvr);
}

TEST_CASE("endo adds exactly the pseudo-Frobenius numbers") {
  for (auto const& h : enumerate_semigroups(8)) {
    if (h.is_dvr()) {
      continue;
    }
    auto endo = endo_semigroup(h);
    std::vector<Int> added;
    for (Int z = 0; z < h.conductor(); ++z) {
      if (endo.contains(z) && !h.contains(z)) {
        added.push_back(z);
      }
    }
    CHECK(added == h.pseudo_frobenius());
  }
}

TEST_CASE("tcdeg identity") {
  auto t579 = tcdeg_identity(NumericalSemigroup::from_generators({5, 7, 9}));
  CHECK(t579.lhs == 3);
  CHECK(t579.rhs == 3);  // 2 - 4 + 5
  CHECK(t579.ok);

  auto t345 = tcdeg_identity(NumericalSemigroup::from_generators({3, 4, 5}));
  CHECK(t345.lhs == 0);
  CHECK(t345.rhs == 0);  // 1 + 3 - 4

  auto t23 = tcdeg_identity(NumericalSemigroup::from_generators({2, 3}));
  CHECK(t23.lhs == 0);
  CHECK(t23.rhs == 0);  // 0 + 2 - 2

  for (auto const& h : enumerate_semigroups(9)) {
    CHECK(tcdeg_identity(h).ok);
  }
}

TEST_CASE("endo checks") {
  auto h579 = NumericalSemigroup::from_generators({5, 7, 9});
  auto c = endo_checks(h579);
  CHECK(c.nu_a == 3);
  CHECK(c.nu_ok);
  CHECK(c.canonical_of_endo_ok);
  CHECK(c.red_d == 2);

  auto c23 = endo_checks(NumericalSemigroup::from_generators({2, 3}));
  CHECK(c23.nu_a == 2);
  CHECK(c23.nu_ok);
  CHECK(c23.canonical_of_endo_ok);

  auto c4 = endo_checks(NumericalSemigroup::from_generators({4, 7, 13, 14}));
  CHECK(c4.nu_ok);
  CHECK(c4.canonical_of_endo_ok);

  for (auto const& h : enumerate_semigroups(9)) {
    if (h.is_dvr()) {
      continue;
    }
    auto ec = endo_checks(h);
    CHECK(ec.nu_ok);
    CHECK(ec.canonical_of_endo_ok);
  }
}

TEST_CASE("idealization predictions") {
  auto h579 = NumericalSemigroup::from_generators({5, 7, 9});
  auto p = idealization_degrees(h579);
  CHECK(p.bideg_pred == 1);
  CHECK(p.cdeg_pred == 6);
  CHECK(p.applicable);

  auto p345 = idealization_degrees(NumericalSemigroup::from_generators({3, 4, 5}));
  CHECK(p345.bideg_pred == 1);
  CHECK(p345.cdeg_pred == 4);

  auto p23 = idealization_degrees(NumericalSemigroup::from_generators({2, 3}));
  CHECK(p23.bideg_pred == -1);
  CHECK(!p23.applicable);

  CHECK_THROWS_AS(idealization_degrees(NumericalSemigroup::from_generators({1})), DvrInput);
}

TEST_CASE("product predictions") {
  auto h345 = NumericalSemigroup::from_generators({3, 4, 5});
  auto h579 = NumericalSemigroup::from_generators({5, 7, 9});
  auto h23 = NumericalSemigroup::from_generators({2, 3});

  CHECK(product_degrees(h345, h345).cdeg_pred == 6);  // 1*3 + 3*1
  CHECK(product_degrees(h579, h345).bideg_pred == 8);  // 1*3 + 5*1
  CHECK(product_degrees(h579, h23).cdeg_pred == cdeg(h579) * 2);  // second summand 0
}
