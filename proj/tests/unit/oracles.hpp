#pragma once

// Independent reference implementations used only by the tests. None of them
// calls into the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Vec = std::vector<Int>;

// Monomials of degree t in n variables, largest first in lex order.
inline std::vector<Vec> lex_monomials(int n, Int t) {
  std::vector<Vec> out;
  Vec e(static_cast<std::size_t>(n), 0);
  std::function<void(int, Int)> rec = [&](int i, Int left) {
    if (i == n - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(e);
      return;
    }
    for (Int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(i)] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, t);
  return out;
}

// Largest possible dim of degree t+1 after dim v in degree t: the quotient by
// the lex-segment ideal spanned by the largest monomials of degree t.
inline Int lex_growth(Int v, Int t) {
  static std::map<std::pair<Int, Int>, Int> memo;
  auto key = std::make_pair(v, t);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int n = 1;
  while (static_cast<Int>(lex_monomials(n, t).size()) < v) ++n;
  std::vector<Vec> deg_t = lex_monomials(n, t);
  std::size_t in_ideal = deg_t.size() - static_cast<std::size_t>(v);
  std::set<Vec> multiples;
  for (std::size_t i = 0; i < in_ideal; ++i) {
    for (int x = 0; x < n; ++x) {
      Vec m = deg_t[i];
      ++m[static_cast<std::size_t>(x)];
      multiples.insert(m);
    }
  }
  Int result = static_cast<Int>(lex_monomials(n, t + 1).size() - multiples.size());
  memo[key] = result;
  return result;
}

inline Int weighted_genus(const Vec& h) {
  Int g = 0;
  for (std::size_t j = 2; j < h.size(); ++j) g += static_cast<Int>(j - 1) * h[j];
  return g;
}

// All O-sequences (1, h1, ...) of total degree d with positive entries.
inline std::vector<Vec> o_sequences(Int d) {
  std::vector<Vec> out;
  Vec h{1};
  std::function<void(Int)> rec = [&](Int left) {
    if (left == 0) {
      out.push_back(h);
      return;
    }
    Int t = static_cast<Int>(h.size()) - 1;
    Int hi = t == 0 ? left : std::min(left, lex_growth(h.back(), t));
    for (Int v = 1; v <= hi; ++v) {
      h.push_back(v);
      rec(left - v);
      h.pop_back();
    }
  };
  rec(d - 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline Int scroll_box_max(Int d1, Int d2) {
  Int best = INT64_MIN;
  for (Int a1 = 1; 2 * a1 <= d1; ++a1) {
    for (Int a2 = 1; 2 * a2 <= d2; ++a2) {
      // Classes a_i h + (d_i - 2 a_i)(h - e) and their intersection number.
      Int b1 = d1 - 2 * a1, b2 = d2 - 2 * a2;
      best = std::max(best, a1 * a2 + a1 * b2 + a2 * b1);
    }
  }
  return best;
}

// Maximum of D1.D2 + 1 over cone classes b e + d f through the vertex (d > 3b).
inline Int cone_vertex_max(Int d1, Int d2) {
  Int best = INT64_MIN;
  for (Int b1 = 0; 3 * b1 < d1; ++b1) {
    for (Int b2 = 0; 3 * b2 < d2; ++b2) {
      best = std::max(best, -3 * b1 * b2 + d1 * b2 + d2 * b1 + 1);
    }
  }
  return best;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Int uniform(std::mt19937_64& g, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(g);
}

}  // namespace oracle
