#pragma once

// Numerics of linkage by complete intersections of three hypersurfaces in P^4.

#include "curvebounds/bounds.hpp"

namespace curvebounds {

struct CIType {
  Int f1;
  Int f2;
  Int f3;

  CIType(Int a, Int b, Int c);
  Int degree() const { return f1 * f2 * f3; }
  /// Liaison slope f1 + f2 + f3 - 5.
  Int slope() const { return f1 + f2 + f3 - 5; }
};

struct LinkedPair {
  Int d_in;
  Int g_in;
  Int d_res;
  Int g_res;
};

struct EvenMargin {
  Int half_d1;  // d1 = 2 * half_d1
  Int m;        // d1 + d2 = 4 (m + 2)
  Int genus;    // extremal genus of degree d1 + d2
  Int genus_gap;  // g2 - g1 across the (2,2,m+2) link
  Int n_max;        // 2mk + 2k + 1, the simplified closed form
  Int margin_lb;    // k(2m + 5 - 2k) - 1, equal to b - n_max
  Int n_max_exact;  // g - (g2 - g1) + 1 evaluated directly; one more than n_max
  Int margin_exact; // b - n_max_exact, still positive
  Int b;
};

struct OddObstruction {
  Int m;  // d1 + d2 = 4m + 6
  Int b_minus_bg;
  Int extremal_genus;
  Int residual_degree;
  Int residual_genus_acm;
  Int residual_genus_defect1;
  Int union_genus;
};

LinkedPair residual(const CIType& ci, Int d_in, Int g_in);

bool even_case_applies(const DegreePair& pair);
EvenMargin even_case_margin(const DegreePair& pair);

bool odd_case_applies(const DegreePair& pair);
OddObstruction odd_degree_obstruction(const DegreePair& pair);

}  // namespace curvebounds
