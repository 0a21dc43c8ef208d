#pragma once

// Closed-form intersection bounds for pairs of curves in P^4 and the
// sixteen-way congruence decomposition used to compare them.

#include <string_view>

#include "curvebounds/arith.hpp"

namespace curvebounds {

/// Degrees of the two curves. Both are at least 1.
struct DegreePair {
  Int d1;
  Int d2;

  DegreePair(Int first, Int second);

  Int sum() const { return d1 + d2; }
  Int product() const { return d1 * d2; }
  bool ordered() const { return d1 <= d2; }
  DegreePair swapped() const { return {d2, d1}; }

  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

struct NormalizedPair {
  DegreePair pair;
  bool swapped;
};

/// Reorders so that d1 <= d2.
NormalizedPair normalize(const DegreePair& pair);

enum class CaseLabel { I = 1, II, III, IV, V, VI, VII, VIII, IX, X, XI, XII, XIII, XIV, XV, XVI };

std::string_view to_string(CaseLabel label);

/// d1 = 4u + alpha, d2 - d1 = 4 k_step + beta.
struct CaseParams {
  int alpha;
  int beta;
  Int u;
  Int k_step;
  CaseLabel label;

  DegreePair reconstruct() const;
};

struct BoundValues {
  Int b_dg;
  Int b;
  Int b_g;
  Int trivial;
  Int g_extremal_of_sum;
};

Int b_dg(const DegreePair& pair);
Int b(const DegreePair& pair);

/// Largest formal genus of an admissible h-vector of degree d (0 for d <= 4).
Int g_extremal(Int d);

Int b_g(const DegreePair& pair);

/// The genus bound evaluated directly from its three-branch definition in
/// d = d1 + d2, without going through g_extremal. Kept separate so the two
/// routes can be checked against each other. Requires d1 + d2 >= 5.
Int b_g_direct(const DegreePair& pair);

BoundValues bound_values(const DegreePair& pair);

/// Requires an ordered pair (d1 <= d2).
CaseParams case_of(const DegreePair& pair);

/// Threshold M(d1, d2) of the case containing the pair. Requires d1 <= d2.
Int m_threshold(const DegreePair& pair);

/// b - b_g as the hard-coded polynomial of the case, in (u, k_step).
Int b_minus_bg_case_poly(const CaseParams& params);

}  // namespace curvebounds
