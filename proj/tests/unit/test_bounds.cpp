#include <doctest.h>

#include <set>

#include "curvebounds/bounds.hpp"
#include "curvebounds/hvectors.hpp"
#include "oracles.hpp"

using namespace curvebounds;

TEST_CASE("b_dg reference values") {
  CHECK(b_dg({4, 4}) == 6);
  CHECK(b_dg({5, 9}) == 23);
  CHECK(b_dg({9, 9}) == 51);
  CHECK(b_dg({100, 100}) == 9606);
  CHECK(b_dg({5, 100}) == 296);
  // min(d1,d2) <= 5 uses the first expression only
  CHECK(b_dg({5, 50}) == 3 * 48 + 2);
  CHECK(b_dg({6, 50}) == std::min({4 * 48 + 2, 3 * 50, 6 * 47}));
}

TEST_CASE("b reference values") {
  CHECK(b({6, 8}) == 21);
  CHECK(b({5, 5}) == 9);
  CHECK(b({100, 100}) == 4950);
  CHECK(b({6, 7}) == 18);
  CHECK(b({7, 9}) == 25);
  CHECK(b({30, 450}) == 6735);
  for (Int d2 = 4; d2 <= 300; ++d2) CHECK(b({4, d2}) == 2 * d2 - 2);
}

TEST_CASE("b equals the full-box scroll maximum") {
  for (Int d1 = 2; d1 <= 70; ++d1) {
    for (Int d2 = 2; d2 <= 70; ++d2) REQUIRE(b({d1, d2}) == oracle::scroll_box_max(d1, d2));
  }
}

TEST_CASE("g_extremal") {
  CHECK(g_extremal(16) == 25);
  CHECK(g_extremal(14) == 18);
  CHECK(g_extremal(10) == 8);
  CHECK(g_extremal(4) == 0);
  for (Int d = 1; d <= 3; ++d) CHECK(g_extremal(d) == 0);
  CHECK_THROWS_AS(g_extremal(0), std::invalid_argument);
  CHECK_THROWS_AS(g_extremal(-3), std::invalid_argument);
}

TEST_CASE("g_extremal matches the genus of (1,3,4,...,4,tail) by weighted sum") {
  for (Int d = 5; d <= 400; ++d) {
    oracle::Vec h{1, 3};
    Int rest = d - 4;
    // Fill with 4s while keeping a tail in 1..4; a final 4 becomes (3,1).
    while (rest > 4) h.push_back(4), rest -= 4;
    if (rest == 4) {
      h.push_back(3);
      h.push_back(1);
    } else {
      h.push_back(rest);
    }
    REQUIRE(g_extremal(d) == oracle::weighted_genus(h));
  }
}

TEST_CASE("b_g and the direct three-branch form agree") {
  CHECK(b_g({7, 9}) == 26);
  CHECK(b_g({30, 450}) == 28562);
  CHECK(b_g({5, 5}) == 9);
  CHECK(b_g({6, 7}) == 16);
  for (Int d = 5; d <= 5000; ++d) REQUIRE(g_extremal(d) + 1 == b_g_direct({1, d - 1}));
  CHECK_THROWS(b_g_direct({2, 2}));
}

TEST_CASE("symmetry of the three bounds on 1..500") {
  for (Int d1 = 1; d1 <= 500; ++d1) {
    for (Int d2 = d1 + 1; d2 <= 500; ++d2) {
      DegreePair p(d1, d2), q(d2, d1);
      REQUIRE(b_dg(p) == b_dg(q));
      REQUIRE(b(p) == b(q));
      REQUIRE(b_g(p) == b_g(q));
    }
  }
}

TEST_CASE("DegreePair validation and normalization") {
  CHECK_THROWS_AS(DegreePair(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(DegreePair(3, -1), std::invalid_argument);
  NormalizedPair n = normalize({9, 4});
  CHECK(n.swapped);
  CHECK(n.pair == DegreePair(4, 9));
  CHECK_FALSE(normalize({4, 9}).swapped);
}

TEST_CASE("case_of decomposition") {
  CaseParams c = case_of({8, 8});
  CHECK(c.alpha == 0);
  CHECK(c.beta == 0);
  CHECK(c.u == 2);
  CHECK(c.k_step == 0);
  CHECK(c.label == CaseLabel::I);

  c = case_of({7, 7});
  CHECK((c.alpha == 3 && c.beta == 0 && c.u == 1 && c.k_step == 0));
  CHECK(c.label == CaseLabel::XII);

  c = case_of({5, 7});
  CHECK((c.alpha == 1 && c.beta == 2 && c.u == 1 && c.k_step == 0));
  CHECK(c.label == CaseLabel::II);

  CHECK_THROWS_AS(case_of({9, 7}), std::invalid_argument);
}

TEST_CASE("case_of reconstructs every ordered pair and labels are distinct") {
  std::set<CaseLabel> labels;
  for (Int d1 = 1; d1 <= 250; ++d1) {
    for (Int d2 = d1; d2 <= 250; ++d2) {
      CaseParams c = case_of({d1, d2});
      REQUIRE(c.reconstruct() == DegreePair(d1, d2));
      // independent decomposition by repeated subtraction
      Int u = 0, r = d1;
      while (r >= 4) r -= 4, ++u;
      Int k = 0, s = d2 - d1;
      while (s >= 4) s -= 4, ++k;
      REQUIRE(c.u == u);
      REQUIRE(c.alpha == r);
      REQUIRE(c.k_step == k);
      REQUIRE(c.beta == s);
      labels.insert(c.label);
    }
  }
  CHECK(labels.size() == 16);
}

TEST_CASE("m_threshold values") {
  CHECK(m_threshold({8, 8}) == 16);
  CHECK(m_threshold({7, 7}) == 0);
  CHECK(m_threshold({5, 7}) == -1);
  CHECK(m_threshold({5, 5}) == 0);   // X
  CHECK(m_threshold({5, 6}) == 9);   // XIV: 4 d1 - 11
  CHECK(m_threshold({6, 8}) == 20);  // XI: 4 d2 - 12
  CHECK_THROWS(m_threshold({8, 6}));
}

TEST_CASE("case polynomials") {
  CHECK(b_minus_bg_case_poly({0, 0, 2, 0, CaseLabel::I}) == 2);
  CHECK(b_minus_bg_case_poly({1, 0, 1, 0, CaseLabel::X}) == 0);
  CHECK(b_minus_bg_case_poly({2, 1, 1, 0, CaseLabel::VII}) == 2);
  CHECK_THROWS(b_minus_bg_case_poly({2, 1, 1, 0, CaseLabel::I}));
}

TEST_CASE("case identity and threshold implication for 6 <= d1 <= d2 <= 200") {
  for (Int d1 = 6; d1 <= 200; ++d1) {
    for (Int d2 = d1; d2 <= 200; ++d2) {
      DegreePair p(d1, d2);
      Int diff = b(p) - b_g(p);
      REQUIRE(b_minus_bg_case_poly(case_of(p)) == diff);
      Int gap2 = (d2 - d1) * (d2 - d1);
      Int m = m_threshold(p);
      if (gap2 <= m) REQUIRE(diff >= 0);
      if (gap2 < m) REQUIRE(diff > 0);
    }
  }
}

TEST_CASE("b is at most b_dg on the diagonal from 20 on") {
  for (Int d = 20; d <= 500; ++d) REQUIRE(b({d, d}) <= b_dg({d, d}));
}

TEST_CASE("bound_values bundles the closed forms") {
  BoundValues v = bound_values({30, 450});
  CHECK(v.b == 6735);
  CHECK(v.b_g == 28562);
  CHECK(v.b_dg == 12150);
  CHECK(v.trivial == 13500);
  CHECK(v.g_extremal_of_sum == 28561);
}

TEST_CASE("exact division rejects remainders") {
  CHECK(exact_div(12, 4, "t") == 3);
  CHECK_THROWS_AS(exact_div(13, 4, "t"), IntegralityError);
  CHECK(to_string(CaseLabel::XIV) == "XIV");
}
