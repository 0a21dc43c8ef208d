#pragma once

// Mechanical checks of the bound statements, table and figure reproduction,
// and assembly of everything known about a degree pair.

#include <optional>
#include <string>
#include <vector>

#include "curvebounds/bounds.hpp"
#include "curvebounds/hvectors.hpp"

namespace curvebounds {

// ---- case analysis ----------------------------------------------------------

struct CaseCheck {
  DegreePair pair;
  CaseParams params;
  Int poly_value;
  Int b_minus_bg;
  Int threshold;
  Int gap_squared;
  bool condition;        // gap_squared <= threshold
  bool strict_condition;  // gap_squared < threshold
  bool identity_ok;
  bool implication_ok;   // vacuous when !condition
  bool converse_counterexample;  // b_g <= b although !condition
};

struct CasesSummary {
  Int range_max;
  Int pairs;
  Int conditions_met;
  std::vector<CaseCheck> identity_failures;
  std::vector<CaseCheck> implication_failures;
  Int converse_counterexamples;
};

/// Requires 6 <= d1 <= d2.
CaseCheck check_case(const DegreePair& pair);
CasesSummary verify_cases(Int range_max);

// ---- Table 1 ----------------------------------------------------------------

struct Table1Cell {
  Int d1, d2;
  Int printed_b, printed_b_dg;
  Int b, b_dg;
  bool b_ok, b_dg_ok;
  bool known_discrepancy;
};

struct Table1Summary {
  std::vector<Table1Cell> cells;
  Int matching_cells;    // both entries agree
  Int unexpected;        // mismatches other than the known one
  Int known_flagged;     // known discrepancies actually observed
};

Table1Summary verify_table1();

// ---- ACM regularity certificate --------------------------------------------

enum class AcmRoute { GenusArgument, CaseAnalysis, Regularity };

const char* to_string(AcmRoute route);

struct AcmCertificate {
  DegreePair pair;  // the second curve is the ACM one
  Int a_value;      // floor(b / d1)
  Int reg_upper;    // regularity bound used by the proof step
  Int reg_listed;   // actual regularity of the h-vector(s) considered
  bool claim_holds;
  bool claim2_consistent;
  AcmRoute route;
  std::optional<std::string> special_case;
  bool strict;      // conclusion is |C1 n C2| < b
};

/// Requires d1, d2 >= 6. `c2_hvector`, if given, is the h-vector of the ACM curve.
AcmCertificate acm_certificate(const DegreePair& pair,
                               const std::optional<HVector>& c2_hvector = std::nullopt);

struct AcmSweep {
  Int d_min, d_max;
  Int pairs;
  std::vector<AcmCertificate> failures;
  bool matches_expected;  // failures are exactly d2 = 8, d1 >= 10
};

AcmSweep acm_sweep(Int d_min, Int d_max);

// ---- extremality ------------------------------------------------------------

struct ExtremalityRow {
  Int d;
  HVector argmax;
  Int max_genus;
  Int g_extremal;
  Int extremal_genus;  // genus of extremal_hvector(d)
  bool ok;
};

std::vector<ExtremalityRow> verify_extremality(Int d_max, Int d_min = 9);

// ---- low degree and the full report ---------------------------------------

struct LowDegreeStatus {
  DegreePair pair;  // normalized
  Int bound;
  bool strict;      // count is strictly below `bound` off a common cubic
  bool achievable;
  std::string mechanism;
};

/// Requires min(d1, d2) in {4, 5}.
LowDegreeStatus low_degree_status(const DegreePair& pair);

enum class ResultId {
  Trivial,
  DiazGiuffrida,
  CubicSurface,
  GenusBound,
  CaseAnalysis,
  EvenLinkage,
  OddLinkage,
  AcmCurve,
  LowDegree,
};

const char* to_string(ResultId id);

struct Provenance {
  ResultId id;
  std::string hypothesis;
  Int bound;
  bool strict;       // strictly below `bound` for curves not on a common cubic
  bool conditional;  // needs a geometric hypothesis beyond the degrees
  bool binding;      // false when the entry is weaker than the trivial bound
};

struct BoundReport {
  DegreePair pair;
  BoundValues values;
  Int best_proved;
  std::vector<Provenance> provenance;
  std::vector<std::string> flags;
  /// b is attained by curves on a smooth cubic scroll, so it cannot be
  /// improved without excluding that configuration.
  bool b_attained_on_cubic;
};

/// Degree-specific results enter only from degree 4 on; smaller pairs get the
/// general bounds alone.
BoundReport conjecture_status(const DegreePair& pair);

// ---- grids ------------------------------------------------------------------

enum class Reference { BDG, B };

const char* to_string(Reference ref);

struct GridCell {
  int sign;
  Int magnitude;
  friend bool operator==(const GridCell&, const GridCell&) = default;
};

struct SignGrid {
  Reference reference;
  Int d_min, d_max;
  std::vector<GridCell> cells;  // row d2, column d1, row-major

  Int side() const { return d_max - d_min + 1; }
  const GridCell& at(Int d1, Int d2) const;
  Int max_magnitude() const;
};

/// `threads` = 0 uses the hardware concurrency; 1 evaluates serially.
SignGrid make_grid(Reference reference, Int d_min, Int d_max, unsigned threads = 0);

}  // namespace curvebounds
