#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace curvebounds {

using Int = std::int64_t;

/// Raised when a division that must be exact on its congruence class leaves a
/// remainder. Seeing this means a formula was applied outside its domain.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Int exact_div(Int num, Int den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw IntegralityError(std::string(what) + ": " + std::to_string(num) +
                           " is not divisible by " + std::to_string(den));
  }
  return num / den;
}

// Floor division and modulus with a nonnegative remainder for positive `den`.
inline Int floor_div(Int num, Int den) {
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

inline Int pos_mod(Int num, Int den) { return num - floor_div(num, den) * den; }

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace curvebounds
