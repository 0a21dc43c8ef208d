#include "curvebounds/liaison.hpp"

#include <string>

#include "curvebounds/hvectors.hpp"

namespace curvebounds {

namespace {

std::string pair_str(const DegreePair& p) {
  return "(" + std::to_string(p.d1) + "," + std::to_string(p.d2) + ")";
}

}  // namespace

CIType::CIType(Int a, Int b, Int c) : f1(a), f2(b), f3(c) {
  require(a >= 1 && b >= 1 && c >= 1, "complete intersection degrees must be positive");
}

LinkedPair residual(const CIType& ci, Int d_in, Int g_in) {
  Int d_res = ci.degree() - d_in;
  require(d_in > 0 && d_res > 0, "linked degree " + std::to_string(d_in) +
                                     " must lie strictly between 0 and " +
                                     std::to_string(ci.degree()));
  Int shift = exact_div(ci.slope() * (d_in - d_res), 2, "residual genus");
  return {d_in, g_in, d_res, g_in - shift};
}

bool even_case_applies(const DegreePair& p) {
  return p.d1 < p.d2 && p.d1 % 2 == 0 && p.d2 % 2 == 0 && p.sum() % 4 == 0 && p.sum() >= 16;
}

EvenMargin even_case_margin(const DegreePair& p) {
  require(even_case_applies(p),
          pair_str(p) + " needs d1 < d2, both even, d1 + d2 divisible by 4 and >= 16");
  EvenMargin out{};
  out.half_d1 = p.d1 / 2;
  out.m = p.sum() / 4 - 2;
  CIType ci(2, 2, out.m + 2);
  out.genus = g_extremal(p.sum());
  // g1 enters only as an offset, so link from genus 0.
  out.genus_gap = residual(ci, p.d1, 0).g_res;
  Int k = out.half_d1;
  out.n_max = 2 * out.m * k + 2 * k + 1;
  out.margin_lb = k * (2 * out.m + 5 - 2 * k) - 1;
  out.n_max_exact = rosa_bound(out.genus, 0, out.genus_gap);
  out.b = b(p);
  out.margin_exact = out.b - out.n_max_exact;
  return out;
}

bool odd_case_applies(const DegreePair& p) {
  return p.d2 - p.d1 == 4 && p.sum() % 4 == 2 && p.d1 >= 7 && p.d1 % 2 == 1;
}

OddObstruction odd_degree_obstruction(const DegreePair& p) {
  require(odd_case_applies(p),
          pair_str(p) + " needs d2 - d1 = 4, d1 + d2 = 2 mod 4 and odd d1 >= 7");
  OddObstruction out{};
  out.m = (p.sum() - 6) / 4;
  out.b_minus_bg = b(p) - b_g(p);
  require(out.b_minus_bg == -2, "expected b - b_g = -2 at " + pair_str(p));
  CIType ci(2, 2, out.m + 2);
  out.extremal_genus = g_extremal(p.sum());
  LinkedPair from_acm = residual(ci, p.sum(), out.extremal_genus);
  LinkedPair from_defect = residual(ci, p.sum(), out.extremal_genus - 1);
  out.residual_degree = from_acm.d_res;
  out.residual_genus_acm = from_acm.g_res;
  out.residual_genus_defect1 = from_defect.g_res;
  // The second curve (genus 0) is linked to the first curve plus the residual.
  out.union_genus = residual(ci, p.d2, 0).g_res;
  return out;
}

}  // namespace curvebounds
