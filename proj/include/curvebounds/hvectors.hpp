#pragma once

// h-vectors of zero-dimensional schemes in P^3: Macaulay growth, genus,
// admissibility for general hyperplane sections of curves in P^4, and
// exhaustive enumeration.

#include <functional>
#include <string>
#include <vector>

#include "curvebounds/arith.hpp"

namespace curvebounds {

using HVector = std::vector<Int>;

struct HilbertFunction {
  std::vector<Int> prefix;  // values in degrees 0..r
  Int stable;               // value from degree r on
};

struct GenusProfile {
  HVector hvector;
  Int rao_defect;
  Int genus;
};

enum class Rule { R1, R2, R3, R4, R5, R6, R7, R8 };

const char* to_string(Rule rule);

struct RuleViolation {
  Rule rule;
  std::string detail;
};

struct Admissibility {
  bool admissible;
  std::vector<RuleViolation> violations;
};

struct MaxGenus {
  HVector hvector;
  Int genus;
};

Int hvector_degree(const HVector& h);

/// Binomial coefficient C(n, k), saturating at INT64_MAX.
Int binomial_sat(Int n, Int k);

/// Largest value allowed in degree+1 after `value` in `degree`.
Int macaulay_next_max(Int value, Int degree);

bool is_o_sequence(const HVector& h);

HilbertFunction integrate(const HVector& h);
HVector difference(const HilbertFunction& hf);

Int genus_of_hvector(const HVector& h);
GenusProfile genus_with_defect(const HVector& h, Int k);

/// Genus of (1,3,4^m,a,b) with trailing zeros dropped. Tail (a,b) must be one
/// of (1,0), (2,0), (3,0), (3,1).
Int acm_genus_closed_form(Int m, Int a, Int b);

struct RuleSet {
  bool r6 = true;
  bool r8 = true;
};

/// Rejects degree < 9.
Admissibility is_admissible(const HVector& h, RuleSet rules = {});

/// Current cap on the enumeration degree (CURVEBOUNDS_MAX_ENUM, default 120).
Int enumeration_cap();

/// Visits admissible h-vectors of degree d in lexicographic order.
void for_each_admissible(Int d, const std::function<void(const HVector&)>& visit,
                         RuleSet rules = {});

std::vector<HVector> enumerate_admissible(Int d, RuleSet rules = {});

HVector extremal_hvector(Int d);

MaxGenus max_genus_bruteforce(Int d, RuleSet rules = {});

Int rosa_bound(Int g, Int g1, Int g2);

/// Parses "1,3,4,2". Throws std::invalid_argument on malformed input.
HVector parse_hvector(const std::string& text);
std::string format_hvector(const HVector& h);

}  // namespace curvebounds
