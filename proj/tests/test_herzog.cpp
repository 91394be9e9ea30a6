#include "nsring/herzog.hpp"

#include "doctest.h"

using namespace nsring;

TEST_CASE("herzog exponents") {
  auto d579 = herzog_data(5, 7, 9);
  CHECK(!d579.multiple_solutions);
  CHECK(d579.primary() == HerzogExponents{4, 1, 1, 1, 1, 2});

  auto d345 = herzog_data(3, 4, 5);
  CHECK(d345.primary() == HerzogExponents{2, 1, 1, 1, 1, 1});

  auto d568 = herzog_data(5, 6, 8);
  CHECK(d568.primary() == HerzogExponents{2, 2, 2, 1, 1, 1});
}

TEST_CASE("herzog errors") {
  CHECK_THROWS_AS(herzog_data(3, 4, 7), NotThreeGenerated);   // 7 = 3 + 4
  CHECK_THROWS_AS(herzog_data(2, 3, 5), NotThreeGenerated);
  CHECK_THROWS_AS(herzog_data(4, 5, 6), SymmetricInput);
}

TEST_CASE("closed forms vs the engine") {
  auto r568 = closed_form_degrees(5, 6, 8);
  CHECK(r568.cdeg_formula == 2);
  CHECK(r568.cdeg_engine == 2);
  CHECK(r568.cdeg_match);
  CHECK(r568.bideg_formula == 2);
  CHECK(r568.bideg_engine == 2);
  CHECK(r568.bideg_match);

  auto r579 = closed_form_degrees(5, 7, 9);
  CHECK(r579.cdeg_formula == 2);
  CHECK(r579.cdeg_match);
  CHECK(r579.bideg_formula == 8);
  CHECK(r579.bideg_engine == 1);
  CHECK(!r579.bideg_match);

  auto r345 = closed_form_degrees(3, 4, 5);
  CHECK(r345.cdeg_formula == 1);
  CHECK(r345.cdeg_match);
  CHECK(r345.bideg_formula == 2);
  CHECK(r345.bideg_engine == 1);
  CHECK(!r345.bideg_match);
}

TEST_CASE("relations hold by substitution across a small survey") {
  auto survey = herzog_survey(20);
  CHECK(!survey.rows.empty());
  for (auto const& row : survey.rows) {
    for (auto const& e : row.data.solutions) {
      Int const a = row.data.a, b = row.data.b, c = row.data.c;
      CHECK((e.a1 + e.a2) * a == e.b1 * b + e.c2 * c);
      CHECK((e.b1 + e.b2) * b == e.a2 * a + e.c1 * c);
      CHECK((e.c1 + e.c2) * c == e.a1 * a + e.b2 * b);
    }
  }
}
