#include "curvebounds/surfaces.hpp"

#include <algorithm>
#include <sstream>

namespace curvebounds {

namespace {

void term(std::ostringstream& os, Int coef, const char* sym, bool first) {
  if (coef == 0) return;
  if (coef < 0) {
    os << '-';
  } else if (!first) {
    os << '+';
  }
  Int mag = coef < 0 ? -coef : coef;
  if (mag != 1) os << mag;
  os << sym;
}

void require_box(const DegreePair& p) {
  require(p.d1 >= 2 && p.d2 >= 2, "scroll optimization needs degrees >= 2");
}

}  // namespace

ScrollClass ScrollClass::curve(Int a, Int b) {
  require(a > 0 && b >= 0, "a curve class on the scroll needs a > 0 and b >= 0");
  return {a, b};
}

std::string render(const ScrollClass& c) {
  Int h = c.a + c.b;
  Int e = -c.b;
  if (h == 0 && e == 0) return "0";
  std::ostringstream os;
  term(os, h, "h", true);
  term(os, e, "e", h == 0);
  return os.str();
}

Int DelPezzoClass::degree() const {
  Int s = 3 * c0;
  for (Int x : c) s -= x;
  return s;
}

std::string render(const DelPezzoClass& c) {
  std::ostringstream os;
  bool first = true;
  if (c.c0 != 0) {
    term(os, c.c0, "h", true);
    first = false;
  }
  for (std::size_t i = 0; i < c.c.size(); ++i) {
    std::string sym = "e" + std::to_string(i + 1);
    if (c.c[i] == 0) continue;
    term(os, -c.c[i], sym.c_str(), first);
    first = false;
  }
  return first ? "0" : os.str();
}

Int scroll_intersect(const ScrollClass& c1, const ScrollClass& c2) {
  return c1.a * c2.a + c1.a * c2.b + c2.a * c1.b;
}

Int scroll_objective(Int a1, Int a2, const DegreePair& p) {
  require(a1 >= 1 && a1 <= p.d1 / 2 && a2 >= 1 && a2 <= p.d2 / 2,
          "(" + std::to_string(a1) + "," + std::to_string(a2) + ") lies outside the box 1.." +
              std::to_string(p.d1 / 2) + " x 1.." + std::to_string(p.d2 / 2));
  return -3 * a1 * a2 + a1 * p.d2 + a2 * p.d1;
}

OptResult scroll_maximize(const DegreePair& p) {
  require_box(p);
  Int m1 = p.d1 / 2;
  Int m2 = p.d2 / 2;
  std::vector<std::pair<Int, Int>> corners;
  for (auto c : {std::pair<Int, Int>{1, 1}, {1, m2}, {m1, 1}, {m1, m2}}) {
    if (std::find(corners.begin(), corners.end(), c) == corners.end()) corners.push_back(c);
  }
  OptResult out{scroll_objective(1, 1, p), {}, {}};
  for (auto [a1, a2] : corners) out.maximum = std::max(out.maximum, scroll_objective(a1, a2, p));
  for (auto [a1, a2] : corners) {
    if (scroll_objective(a1, a2, p) != out.maximum) continue;
    out.maximizers.emplace_back(a1, a2);
    out.classes.emplace_back(ScrollClass::curve(a1, p.d1 - 2 * a1),
                             ScrollClass::curve(a2, p.d2 - 2 * a2));
  }
  return out;
}

Int scroll_bruteforce(const DegreePair& p) {
  require_box(p);
  Int best = scroll_objective(1, 1, p);
  for (Int a1 = 1; a1 <= p.d1 / 2; ++a1) {
    for (Int a2 = 1; a2 <= p.d2 / 2; ++a2) best = std::max(best, scroll_objective(a1, a2, p));
  }
  return best;
}

ConeResult cone_bound(const DegreePair& p, const ConeIncidence& inc) {
  Int i = pos_mod(p.d1 - 1, 3) + 1;
  Int j = pos_mod(p.d2 - 1, 3) + 1;
  if (!inc.through_vertex_1) {
    require(p.d1 % 3 == 0, "a curve off the vertex has degree divisible by 3, got d1 = " +
                               std::to_string(p.d1));
  }
  if (!inc.through_vertex_2) {
    require(p.d2 % 3 == 0, "a curve off the vertex has degree divisible by 3, got d2 = " +
                               std::to_string(p.d2));
  }
  if (!(inc.through_vertex_1 && inc.through_vertex_2)) {
    return {exact_div(p.product(), 3, "cone_bound"), i, j, false, false, true};
  }
  Int bound = exact_div(p.product() - i * j, 3, "cone_bound") + 1;
  bool rulings_only = (p.d1 - i) == 0 && (p.d2 - j) == 0;
  return {bound, i, j, true, 3 * bound > p.product(), !rulings_only};
}

Int dp_intersect(const DelPezzoClass& x, const DelPezzoClass& y) {
  Int s = x.c0 * y.c0;
  for (std::size_t i = 0; i < x.c.size(); ++i) s -= x.c[i] * y.c[i];
  return s;
}

DelPezzoClass dp_canonical() { return {-3, {-1, -1, -1, -1, -1}}; }

DelPezzoClass dp_hyperplane() { return {3, {1, 1, 1, 1, 1}}; }

std::pair<DelPezzoClass, DelPezzoClass> dp_construction(Int k, Int l) {
  require(k >= 1 && l >= 1, "dp_construction needs k, l >= 1");
  DelPezzoClass first{2 * k + 1, {1, k, k, k, k + 1}};
  DelPezzoClass second{l + 1, {l, 1, 1, 0, 0}};
  return {first, second};
}

Int dp_genus(const DelPezzoClass& c) {
  return 1 + exact_div(dp_intersect(c, c) + dp_intersect(c, dp_canonical()), 2, "dp_genus");
}

}  // namespace curvebounds
