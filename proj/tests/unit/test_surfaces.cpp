#include <doctest.h>

#include "curvebounds/surfaces.hpp"
#include "oracles.hpp"

using namespace curvebounds;

TEST_CASE("scroll_intersect") {
  CHECK(scroll_intersect({3, 0}, {1, 6}) == 21);
  CHECK(scroll_intersect({1, 0}, {1, 0}) == 1);
  CHECK(scroll_intersect({2, 1}, {1, 3}) == 9);
}

TEST_CASE("scroll_intersect is symmetric and bilinear") {
  auto g = oracle::rng(3);
  auto rc = [&] { return ScrollClass{oracle::uniform(g, -50, 50), oracle::uniform(g, -50, 50)}; };
  for (int trial = 0; trial < 5000; ++trial) {
    ScrollClass x = rc(), y = rc(), z = rc();
    Int s = oracle::uniform(g, -9, 9);
    REQUIRE(scroll_intersect(x, y) == scroll_intersect(y, x));
    ScrollClass comb{s * x.a + z.a, s * x.b + z.b};
    REQUIRE(scroll_intersect(comb, y) == s * scroll_intersect(x, y) + scroll_intersect(z, y));
  }
}

TEST_CASE("scroll classes render in the h, e basis") {
  CHECK(render(ScrollClass{3, 0}) == "3h");
  CHECK(render(ScrollClass{1, 6}) == "7h-6e");
  CHECK(render(ScrollClass{1, 0}) == "h");
  CHECK(render(ScrollClass{1, 1}) == "2h-e");
  CHECK(render(ScrollClass{-1, 1}) == "-e");
  CHECK(render(ScrollClass{0, 0}) == "0");
  CHECK(ScrollClass{2, 3}.degree() == 7);
  CHECK_THROWS(ScrollClass::curve(0, 2));
  CHECK_THROWS(ScrollClass::curve(2, -1));
}

TEST_CASE("scroll_objective") {
  CHECK(scroll_objective(3, 1, {6, 8}) == 21);
  for (Int d2 = 2; d2 <= 40; ++d2) CHECK(scroll_objective(1, 1, {2, d2}) == d2 - 1);
  CHECK(scroll_objective(2, 1, {5, 5}) == 9);
  CHECK_THROWS(scroll_objective(0, 1, {6, 8}));
  CHECK_THROWS(scroll_objective(4, 1, {6, 8}));
  CHECK_THROWS(scroll_objective(1, 5, {6, 8}));
}

TEST_CASE("scroll_maximize") {
  OptResult r = scroll_maximize({6, 8});
  CHECK(r.maximum == 21);
  REQUIRE(r.maximizers.size() == 1);
  CHECK(r.maximizers[0] == std::pair<Int, Int>{3, 1});
  CHECK(render(r.classes[0].first) == "3h");
  CHECK(render(r.classes[0].second) == "7h-6e");

  r = scroll_maximize({5, 5});
  CHECK(r.maximum == 9);
  CHECK(r.maximizers == std::vector<std::pair<Int, Int>>{{1, 2}, {2, 1}});

  r = scroll_maximize({2, 7});
  CHECK(r.maximum == 6);
  CHECK(r.maximizers == std::vector<std::pair<Int, Int>>{{1, 1}});

  // Degenerate box: every corner collapses onto (1,1).
  r = scroll_maximize({3, 3});
  CHECK(r.maximizers.size() == 1);
  CHECK_THROWS(scroll_maximize({1, 5}));
}

TEST_CASE("corner reduction and equality with b") {
  for (Int d1 = 2; d1 <= 60; ++d1) {
    for (Int d2 = 2; d2 <= 60; ++d2) {
      DegreePair p(d1, d2);
      OptResult r = scroll_maximize(p);
      REQUIRE(scroll_bruteforce(p) == r.maximum);
      REQUIRE(oracle::scroll_box_max(d1, d2) == r.maximum);
      for (std::size_t i = 0; i < r.maximizers.size(); ++i) {
        auto [c1, c2] = r.classes[i];
        REQUIRE(c1.degree() == d1);
        REQUIRE(c2.degree() == d2);
        REQUIRE(scroll_intersect(c1, c2) == r.maximum);
      }
    }
  }
  for (Int d1 = 2; d1 <= 200; ++d1) {
    for (Int d2 = 2; d2 <= 200; ++d2) REQUIRE(scroll_maximize({d1, d2}).maximum == b({d1, d2}));
  }
  CHECK(scroll_bruteforce({2, 2}) == 1);
  CHECK(scroll_bruteforce({100, 100}) == 4950);
}

TEST_CASE("cone_bound") {
  CHECK(cone_bound({6, 6}, {false, false}).bound == 12);
  CHECK(cone_bound({1, 1}, {true, true}).bound == 1);
  ConeResult r = cone_bound({4, 4}, {true, true});
  CHECK(r.bound == 6);
  CHECK(r.i == 1);
  CHECK(r.j == 1);
  CHECK(r.strict_below_third_plus_one);
  CHECK(r.exceeds_third);
  CHECK(cone_bound({6, 7}, {false, true}).bound == 14);
  CHECK_FALSE(cone_bound({1, 2}, {true, true}).sharpness_claimed);
  CHECK(cone_bound({4, 2}, {true, true}).sharpness_claimed);
  CHECK_THROWS(cone_bound({7, 6}, {false, true}));
  CHECK_THROWS(cone_bound({6, 7}, {true, false}));
}

TEST_CASE("cone bound matches the brute force over ruled-surface classes") {
  for (Int d1 = 1; d1 <= 60; ++d1) {
    for (Int d2 = 1; d2 <= 60; ++d2) {
      REQUIRE(cone_bound({d1, d2}, {true, true}).bound == oracle::cone_vertex_max(d1, d2));
    }
  }
}

TEST_CASE("cone integrality and the comparison with d1 d2 / 3") {
  for (Int d1 = 1; d1 <= 300; ++d1) {
    for (Int d2 = 1; d2 <= 300; ++d2) {
      ConeResult r = cone_bound({d1, d2}, {true, true});
      REQUIRE((d1 * d2 - r.i * r.j) % 3 == 0);
      REQUIRE(3 * r.bound < d1 * d2 + 3);
      bool special = (r.i == 1 && r.j == 1) || (r.i == 1 && r.j == 2) || (r.i == 2 && r.j == 1);
      REQUIRE(r.exceeds_third == special);
      if (!special) REQUIRE(3 * r.bound <= d1 * d2);
      if (r.i == 1 && r.j == 1) REQUIRE(3 * r.bound == d1 * d2 + 2);
      if (r.i + r.j == 3 && r.i * r.j == 2) REQUIRE(3 * r.bound == d1 * d2 + 1);
    }
  }
}

TEST_CASE("del Pezzo pairing") {
  auto [l1, l2] = dp_construction(2, 3);
  CHECK(dp_intersect(l1, l2) == 13);
  CHECK(dp_intersect(dp_canonical(), dp_canonical()) == 4);
  CHECK(dp_intersect(dp_hyperplane(), dp_hyperplane()) == 4);
  CHECK(dp_hyperplane().degree() == 4);
  CHECK(dp_genus(dp_hyperplane()) == 1);
  CHECK(render(l1) == "5h-e1-2e2-2e3-2e4-3e5");
  CHECK(render(l2) == "4h-3e1-e2-e3");
  CHECK(dp_genus({0, {-1, 0, 0, 0, 0}}) == 0);
  CHECK(dp_genus({1, {1, 0, 0, 0, 0}}) == 0);
}

TEST_CASE("del Pezzo pairing is symmetric and bilinear") {
  auto g = oracle::rng(11);
  auto rc = [&] {
    DelPezzoClass c{oracle::uniform(g, -20, 20), {}};
    for (auto& x : c.c) x = oracle::uniform(g, -20, 20);
    return c;
  };
  for (int trial = 0; trial < 5000; ++trial) {
    DelPezzoClass x = rc(), y = rc(), z = rc();
    Int s = oracle::uniform(g, -5, 5);
    DelPezzoClass comb{s * x.c0 + z.c0, {}};
    for (std::size_t i = 0; i < 5; ++i) comb.c[i] = s * x.c[i] + z.c[i];
    REQUIRE(dp_intersect(x, y) == dp_intersect(y, x));
    REQUIRE(dp_intersect(comb, y) == s * dp_intersect(x, y) + dp_intersect(z, y));
    REQUIRE(x.degree() == dp_intersect(x, dp_hyperplane()));
  }
}

TEST_CASE("del Pezzo construction attains b with rational curves") {
  for (Int k = 1; k <= 50; ++k) {
    for (Int l = 1; l <= 50; ++l) {
      auto [l1, l2] = dp_construction(k, l);
      REQUIRE(l1.degree() == 2 * k + 1);
      REQUIRE(l2.degree() == 2 * l + 1);
      REQUIRE(dp_intersect(l1, l2) == 2 * k * l + 1);
      REQUIRE(dp_intersect(l1, l2) == b({2 * k + 1, 2 * l + 1}));
      REQUIRE(dp_genus(l1) == 0);
      REQUIRE(dp_genus(l2) == 0);
    }
  }
  auto [a, c] = dp_construction(1, 1);
  CHECK(a.degree() == 3);
  CHECK(c.degree() == 3);
  CHECK(dp_intersect(a, c) == 3);
  CHECK_THROWS(dp_construction(0, 2));
}
