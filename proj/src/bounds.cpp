#include "curvebounds/bounds.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace curvebounds {

namespace {

// One row per (alpha, beta) cell. The difference polynomial is
// pu*u + pk*k + pkk*k^2 + p0 and the threshold is md1*d1 + md2*d2 + m0.
struct CaseRow {
  CaseLabel label;
  Int pu, pk, pkk, p0;
  Int md1, md2, m0;
};

using L = CaseLabel;

// Indexed [alpha][beta].
constexpr std::array<std::array<CaseRow, 4>, 4> kCases{{
    {{
        {L::I, 2, 2, -2, -2, 0, 4, -16},
        {L::V, 2, 1, -2, -1, 0, 4, -11},
        {L::IX, 2, 0, -2, -1, 0, 4, -12},
        {L::XIII, 2, -1, -2, -1, 0, 4, -11},
    }},
    {{
        {L::X, 0, 0, -2, 0, 0, 0, 0},
        {L::XIV, 2, -1, -2, -1, 4, 0, -11},
        {L::II, 0, -2, -2, -1, 0, 0, -1},
        {L::VI, 2, -3, -2, -2, 4, 0, -11},
    }},
    {{
        {L::III, 2, 2, -2, -1, 0, 4, -16},
        {L::VII, 2, 1, -2, 0, 0, 4, -11},
        {L::XI, 2, 0, -2, 0, 0, 4, -12},
        {L::XV, 2, -1, -2, 0, 0, 4, -11},
    }},
    {{
        {L::XII, 0, 0, -2, 0, 0, 0, 0},
        {L::XVI, 2, -1, -2, 0, 4, 0, -11},
        {L::IV, 0, -2, -2, -1, 0, 0, -1},
        {L::VIII, 2, -3, -2, -1, 4, 0, -11},
    }},
}};

const CaseRow& row_for(int alpha, int beta) { return kCases.at(alpha).at(beta); }

void require_ordered(const DegreePair& pair) {
  require(pair.ordered(), "pair must satisfy d1 <= d2, got (" + std::to_string(pair.d1) + "," +
                              std::to_string(pair.d2) + ")");
}

}  // namespace

DegreePair::DegreePair(Int first, Int second) : d1(first), d2(second) {
  require(d1 >= 1 && d2 >= 1, "degrees must be positive, got (" + std::to_string(d1) + "," +
                                  std::to_string(d2) + ")");
}

NormalizedPair normalize(const DegreePair& pair) {
  if (pair.ordered()) return {pair, false};
  return {pair.swapped(), true};
}

std::string_view to_string(CaseLabel label) {
  static constexpr std::array<std::string_view, 16> names{
      "I", "II", "III", "IV", "V", "VI", "VII", "VIII",
      "IX", "X", "XI", "XII", "XIII", "XIV", "XV", "XVI"};
  return names.at(static_cast<std::size_t>(label) - 1);
}

DegreePair CaseParams::reconstruct() const {
  Int d1 = 4 * u + alpha;
  return {d1, d1 + 4 * k_step + beta};
}

Int b_dg(const DegreePair& p) {
  Int base = (p.d1 - 2) * (p.d2 - 2) + 2;
  if (std::min(p.d1, p.d2) <= 5) return base;
  return std::min({base, (p.d1 - 3) * p.d2, p.d1 * (p.d2 - 3)});
}

Int b(const DegreePair& p) {
  bool e1 = p.d1 % 2 == 0;
  bool e2 = p.d2 % 2 == 0;
  if (e1 && e2) {
    if (p.d1 <= p.d2) return exact_div(p.d1 * (p.d2 - 1), 2, "b");
    return exact_div((p.d1 - 1) * p.d2, 2, "b");
  }
  if (e1) return exact_div(p.d1 * (p.d2 - 1), 2, "b");
  if (e2) return exact_div((p.d1 - 1) * p.d2, 2, "b");
  return exact_div((p.d1 - 1) * (p.d2 - 1), 2, "b") + 1;
}

Int g_extremal(Int d) {
  require(d >= 1, "g_extremal needs d >= 1, got " + std::to_string(d));
  if (d <= 4) return 0;
  Int sq = d * d - 4 * d;
  switch (d % 4) {
    case 0:
      return exact_div(sq + 8, 8, "g_extremal");
    case 2:
      return exact_div(sq + 4, 8, "g_extremal");
    default:
      return exact_div(sq + 3, 8, "g_extremal");
  }
}

Int b_g(const DegreePair& p) { return g_extremal(p.sum()) + 1; }

Int b_g_direct(const DegreePair& p) {
  Int d = p.sum();
  require(d >= 5, "b_g_direct needs d1 + d2 >= 5");
  Int sq = d * d - 4 * d;
  switch (d % 4) {
    case 0:
      return exact_div(sq, 8, "b_g_direct") + 2;
    case 2:
      return exact_div(sq + 4, 8, "b_g_direct") + 1;
    default:
      return exact_div(sq + 3, 8, "b_g_direct") + 1;
  }
}

BoundValues bound_values(const DegreePair& p) {
  return {b_dg(p), b(p), b_g(p), p.product(), g_extremal(p.sum())};
}

CaseParams case_of(const DegreePair& p) {
  require_ordered(p);
  int alpha = static_cast<int>(p.d1 % 4);
  Int gap = p.d2 - p.d1;
  int beta = static_cast<int>(gap % 4);
  return {alpha, beta, p.d1 / 4, gap / 4, row_for(alpha, beta).label};
}

Int m_threshold(const DegreePair& p) {
  CaseParams c = case_of(p);
  const CaseRow& r = row_for(c.alpha, c.beta);
  return r.md1 * p.d1 + r.md2 * p.d2 + r.m0;
}

Int b_minus_bg_case_poly(const CaseParams& c) {
  require(c.alpha >= 0 && c.alpha < 4 && c.beta >= 0 && c.beta < 4 && c.u >= 0 && c.k_step >= 0,
          "invalid case parameters");
  const CaseRow& r = row_for(c.alpha, c.beta);
  require(r.label == c.label, "case label does not match (alpha, beta)");
  Int k = c.k_step;
  return r.pu * c.u + r.pk * k + r.pkk * k * k + r.p0;
}

}  // namespace curvebounds
