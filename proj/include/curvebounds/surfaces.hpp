#pragma once

// Divisor classes and intersection counts on the smooth cubic scroll, the
// cubic cone and the quartic del Pezzo surface in P^4.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "curvebounds/bounds.hpp"

namespace curvebounds {

/// a*h + b*(h - e) on the cubic scroll.
struct ScrollClass {
  Int a;
  Int b;

  Int degree() const { return 2 * a + b; }
  /// Validated constructor for reduced irreducible curve classes (a > 0, b >= 0).
  static ScrollClass curve(Int a, Int b);
  friend bool operator==(const ScrollClass&, const ScrollClass&) = default;
};

/// Renders in the h, e basis, e.g. "3h", "7h-6e", "h", "2h-e".
std::string render(const ScrollClass& c);

struct ConeIncidence {
  bool through_vertex_1;
  bool through_vertex_2;
};

struct ConeResult {
  Int bound;
  Int i;  // d1 = 3 b1 + i, 1 <= i <= 3
  Int j;
  /// Both curves through the vertex: the count is strictly below d1*d2/3 + 1.
  bool strict_below_third_plus_one;
  /// The bound exceeds d1*d2/3, which happens only for (i,j) in {(1,1),(1,2),(2,1)}.
  bool exceeds_third;
  /// False only when both curves are unions of rulings (b1 = b2 = 0).
  bool sharpness_claimed;
};

/// c0*h - sum c[i]*e_{i+1} on the blowup of P^2 at five points.
struct DelPezzoClass {
  Int c0;
  std::array<Int, 5> c;

  Int degree() const;
  friend bool operator==(const DelPezzoClass&, const DelPezzoClass&) = default;
};

std::string render(const DelPezzoClass& c);

struct OptResult {
  Int maximum;
  std::vector<std::pair<Int, Int>> maximizers;
  std::vector<std::pair<ScrollClass, ScrollClass>> classes;
};

Int scroll_intersect(const ScrollClass& c1, const ScrollClass& c2);
Int scroll_objective(Int a1, Int a2, const DegreePair& pair);
OptResult scroll_maximize(const DegreePair& pair);
Int scroll_bruteforce(const DegreePair& pair);

ConeResult cone_bound(const DegreePair& pair, const ConeIncidence& inc);

Int dp_intersect(const DelPezzoClass& c1, const DelPezzoClass& c2);
DelPezzoClass dp_canonical();
DelPezzoClass dp_hyperplane();
std::pair<DelPezzoClass, DelPezzoClass> dp_construction(Int k, Int l);
Int dp_genus(const DelPezzoClass& c);

}  // namespace curvebounds
