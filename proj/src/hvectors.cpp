#include "curvebounds/hvectors.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

namespace curvebounds {

namespace {

constexpr Int kIntMax = std::numeric_limits<Int>::max();
constexpr Int kDefaultEnumCap = 120;
constexpr Int kMinAdmissibleDegree = 9;

std::string at(std::size_t i, Int v) {
  return "a_" + std::to_string(i) + " = " + std::to_string(v);
}

void require_enum_range(Int d) {
  Int cap = enumeration_cap();
  require(d >= kMinAdmissibleDegree && d <= cap,
          "enumeration degree must lie in 9.." + std::to_string(cap) + ", got " +
              std::to_string(d));
}

// Depth-first search over h-vectors (1,3,a_2,...) of total degree d. Values
// are tried in increasing order so output is lexicographic. Pruning only uses
// consequences of the rules that are decidable on a prefix.
class Enumerator {
 public:
  Enumerator(Int d, RuleSet rules, const std::function<void(const HVector&)>& visit)
      : d_(d), rules_(rules), visit_(visit) {}

  void run() {
    h_ = {1, 3};
    extend(d_ - 4, /*last_allowed_only=*/false);
  }

 private:
  // `closing` is set once an entry below 4 appears past degree 2: at most one
  // more entry may follow.
  void extend(Int remaining, bool closing) {
    if (remaining == 0) {
      if (is_admissible(h_, rules_).admissible) visit_(h_);
      return;
    }
    std::size_t pos = h_.size();
    Int prev = h_.back();
    Int hi = std::min(macaulay_next_max(prev, static_cast<Int>(pos) - 1), remaining);
    Int lo = 1;
    if (pos == 2) lo = 4;
    if (pos == 3 && h_[2] == 4 && rules_.r6) hi = std::min<Int>(hi, 4);
    for (Int v = lo; v <= hi; ++v) {
      bool last = (v == remaining);
      if (closing) {
        // Only a final entry may follow a 3, and it cannot be 2 or (with R8) 3.
        if (!last || v == 2 || (rules_.r8 && v == 3)) continue;
      }
      if (pos >= 3 && v <= 2 && !last) continue;
      h_.push_back(v);
      extend(remaining - v, pos >= 3 && v == 3);
      h_.pop_back();
    }
  }

  Int d_;
  RuleSet rules_;
  const std::function<void(const HVector&)>& visit_;
  HVector h_;
};

}  // namespace

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
    case Rule::R5: return "R5";
    case Rule::R6: return "R6";
    case Rule::R7: return "R7";
    case Rule::R8: return "R8";
  }
  return "?";
}

Int hvector_degree(const HVector& h) { return std::accumulate(h.begin(), h.end(), Int{0}); }

Int binomial_sat(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (Int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    Int num = n - k + i;
    Int g = std::gcd(r, i);
    Int rr = r / g;
    Int ii = i / g;
    Int nn = num / ii;
    if (rr > kIntMax / nn) return kIntMax;
    r = rr * nn;
  }
  return r;
}

Int macaulay_next_max(Int value, Int degree) {
  require(value >= 1 && degree >= 1, "macaulay_next_max needs positive arguments");
  Int rest = value;
  Int result = 0;
  for (Int i = degree; i >= 1 && rest > 0; --i) {
    // Largest top with C(top, i) <= rest.
    Int top = i;
    while (binomial_sat(top + 1, i) <= rest) ++top;
    rest -= binomial_sat(top, i);
    Int term = binomial_sat(top + 1, i + 1);
    if (term > kIntMax - result) return kIntMax;
    result += term;
  }
  return result;
}

bool is_o_sequence(const HVector& h) {
  if (h.empty() || h[0] != 1) return false;
  for (std::size_t t = 1; t < h.size(); ++t) {
    if (h[t] < 1) return false;
    if (t + 1 < h.size() && h[t + 1] > macaulay_next_max(h[t], static_cast<Int>(t))) return false;
  }
  return true;
}

HilbertFunction integrate(const HVector& h) {
  HilbertFunction hf{{}, 0};
  Int acc = 0;
  for (Int v : h) {
    acc += v;
    hf.prefix.push_back(acc);
  }
  hf.stable = acc;
  return hf;
}

HVector difference(const HilbertFunction& hf) {
  HVector h;
  Int prev = 0;
  for (Int v : hf.prefix) {
    h.push_back(v - prev);
    prev = v;
  }
  return h;
}

Int genus_of_hvector(const HVector& h) {
  HilbertFunction hf = integrate(h);
  Int g = 0;
  for (std::size_t i = 1; i < hf.prefix.size(); ++i) g += hf.stable - hf.prefix[i];
  return g;
}

GenusProfile genus_with_defect(const HVector& h, Int k) {
  require(k >= 0, "Rao defect must be nonnegative");
  return {h, k, genus_of_hvector(h) - k};
}

Int acm_genus_closed_form(Int m, Int a, Int b) {
  require(m >= 0, "m must be nonnegative");
  bool ok = (b == 0 && a >= 1 && a <= 3) || (a == 3 && b == 1);
  require(ok, "tail (" + std::to_string(a) + "," + std::to_string(b) +
                  ") is not one of (1,0),(2,0),(3,0),(3,1)");
  return (m + 2) * b + (m + 1) * a + 4 * binomial_sat(m + 1, 2);
}

Admissibility is_admissible(const HVector& h, RuleSet rules) {
  Int d = hvector_degree(h);
  require(d >= kMinAdmissibleDegree,
          "admissibility is defined for degree >= 9, got " + std::to_string(d));
  std::vector<RuleViolation> out;
  auto flag = [&](Rule r, std::string detail) { out.push_back({r, std::move(detail)}); };
  std::size_t r = h.size() - 1;

  if (h[0] != 1) flag(Rule::R1, at(0, h[0]) + ", expected 1");
  if (!is_o_sequence(h)) {
    std::string detail = "not an O-sequence";
    for (std::size_t t = 1; t + 1 < h.size(); ++t) {
      if (h[t] >= 1 && h[t + 1] > macaulay_next_max(h[t], static_cast<Int>(t))) {
        detail = at(t + 1, h[t + 1]) + " exceeds the Macaulay bound " +
                 std::to_string(macaulay_next_max(h[t], static_cast<Int>(t)));
        break;
      }
    }
    flag(Rule::R2, detail);
  }
  if (r < 1 || h[1] != 3) flag(Rule::R3, r < 1 ? "a_1 missing" : at(1, h[1]) + ", expected 3");
  if (r < 2 || h[2] < 4) flag(Rule::R4, r < 2 ? "a_2 missing" : at(2, h[2]) + ", expected >= 4");
  if (r >= 4) {
    for (std::size_t k = 2; k + 2 <= r; ++k) {
      if (h[k] < 4) flag(Rule::R5, at(k, h[k]) + ", expected >= 4");
    }
    if (h[r - 1] < 3) flag(Rule::R5, at(r - 1, h[r - 1]) + ", expected >= 3");
  }
  if (rules.r6 && r >= 3) {
    if (h[2] == 4 && h[3] > 4) flag(Rule::R6, at(3, h[3]) + " after a_2 = 4, expected <= 4");
    if (h[2] == 5 && h[3] > 7) flag(Rule::R6, at(3, h[3]) + " after a_2 = 5, expected <= 7");
  }
  if (r >= 1 && h[r - 1] == 3 && h[r] == 2) flag(Rule::R7, "h-vector ends with (3,2)");
  if (rules.r8) {
    for (std::size_t i = 2; i + 1 <= r; ++i) {
      if (h[i] == h[i + 1] && h[i] <= 3) {
        flag(Rule::R8, "a_" + std::to_string(i) + " = a_" + std::to_string(i + 1) + " = " +
                           std::to_string(h[i]));
      }
    }
  }
  return {out.empty(), std::move(out)};
}

Int enumeration_cap() {
  const char* env = std::getenv("CURVEBOUNDS_MAX_ENUM");
  if (env == nullptr || *env == '\0') return kDefaultEnumCap;
  Int cap = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, cap);
  require(ec == std::errc() && ptr == end && cap >= kMinAdmissibleDegree,
          std::string("CURVEBOUNDS_MAX_ENUM must be an integer >= 9, got '") + env + "'");
  return cap;
}

void for_each_admissible(Int d, const std::function<void(const HVector&)>& visit, RuleSet rules) {
  require_enum_range(d);
  Enumerator(d, rules, visit).run();
}

std::vector<HVector> enumerate_admissible(Int d, RuleSet rules) {
  std::vector<HVector> out;
  for_each_admissible(d, [&](const HVector& h) { out.push_back(h); }, rules);
  return out;
}

HVector extremal_hvector(Int d) {
  require(d >= 5, "extremal_hvector needs d >= 5, got " + std::to_string(d));
  Int p = pos_mod(d - 1, 4) + 1;
  HVector h{1, 3};
  if (p != 4) {
    h.insert(h.end(), static_cast<std::size_t>((d - 4 - p) / 4), 4);
    h.push_back(p);
  } else {
    h.insert(h.end(), static_cast<std::size_t>((d - 8) / 4), 4);
    h.push_back(3);
    h.push_back(1);
  }
  return h;
}

MaxGenus max_genus_bruteforce(Int d, RuleSet rules) {
  MaxGenus best{{}, -1};
  for_each_admissible(
      d,
      [&](const HVector& h) {
        Int g = genus_of_hvector(h);
        if (g > best.genus) best = {h, g};
      },
      rules);
  require(best.genus >= 0, "no admissible h-vector of degree " + std::to_string(d));
  return best;
}

Int rosa_bound(Int g, Int g1, Int g2) { return g - g1 - g2 + 1; }

HVector parse_hvector(const std::string& text) {
  HVector h;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view tok(text.data() + start,
                         (comma == std::string::npos ? text.size() : comma) - start);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    require(!tok.empty() && ec == std::errc() && ptr == tok.data() + tok.size() && v >= 1,
            "malformed h-vector '" + text + "': expected comma-separated positive integers");
    h.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  require(h[0] == 1, "malformed h-vector '" + text + "': must start with 1");
  return h;
}

std::string format_hvector(const HVector& h) {
  std::ostringstream os;
  for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
  return os.str();
}

}  // namespace curvebounds
