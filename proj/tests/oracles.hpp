// Brute-force reference computations for the test suite. Everything here is
// independent of the library's solvers: plain enumeration plus the
// divisibility-based equivalence test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "hilbk3/pell.hpp"

namespace oracle {

using hilbk3::pell::Int;
using hilbk3::pell::Solution;

// Smallest positive unit by direct search over y.
inline std::optional<Solution> unit_by_search(long r, long y_max) {
  for (long y = 1; y <= y_max; ++y) {
    Int v = Int(r) * y * y + 1;
    if (hilbk3::pell::is_square(v)) {
      Int x;
      mpz_sqrt(x.get_mpz_t(), v.get_mpz_t());
      return Solution{x, y};
    }
  }
  return std::nullopt;
}

inline std::optional<Solution> negative_by_search(long r, long y_max) {
  for (long y = 1; y <= y_max; ++y) {
    Int v = Int(r) * y * y - 1;
    if (hilbk3::pell::is_square(v)) {
      Int x;
      mpz_sqrt(x.get_mpz_t(), v.get_mpz_t());
      return Solution{x, y};
    }
  }
  return std::nullopt;
}

// All solutions of X^2 - rY^2 = m with |X| <= x_max (both signs of X,
// Y >= 0; each class is closed under (X, Y) -> (-X, -Y)).
inline std::vector<Solution> box_solutions(long r, long m, long x_max) {
  std::vector<Solution> out;
  Int box = Int(x_max) * x_max;
  for (long y = 0; Int(r) * y * y <= box + std::abs(m); ++y) {
    Int x2 = Int(m) + Int(r) * y * y;
    if (x2 < 0 || x2 > box) continue;
    if (!hilbk3::pell::is_square(x2)) continue;
    Int x;
    mpz_sqrt(x.get_mpz_t(), x2.get_mpz_t());
    out.push_back({x, y});
    if (x != 0) out.push_back({-x, y});
  }
  return out;
}

// Solutions grouped into equivalence classes; returns the fundamental
// representative of each class found in the box (smallest Y, then X > 0).
inline std::vector<Solution> box_classes(long r, long m, long x_max) {
  std::vector<Solution> sols = box_solutions(r, m, x_max);
  std::vector<Solution> reps;
  std::vector<bool> used(sols.size(), false);
  for (std::size_t i = 0; i < sols.size(); ++i) {
    if (used[i]) continue;
    Solution best = sols[i];
    for (std::size_t j = i; j < sols.size(); ++j) {
      if (used[j]) continue;
      if (hilbk3::pell::equivalent(sols[i], sols[j], r, m)) {
        used[j] = true;
        const Solution& s = sols[j];
        if (s.y < best.y || (s.y == best.y && s.x > best.x)) best = s;
      }
    }
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end(), [](const Solution& a, const Solution& b) {
    Int ax = abs(a.x), bx = abs(b.x);
    if (ax != bx) return ax < bx;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
  });
  return reps;
}

// Minimal positive solution of A*X^2 - B*Y^2 = c by direct search over X.
inline std::optional<Solution> skew_by_search(long A, long B, int c, long x_max) {
  for (long x = 1; x <= x_max; ++x) {
    Int v = Int(A) * x * x - c;
    if (mpz_divisible_ui_p(v.get_mpz_t(), B) == 0) continue;
    Int y2 = v / B;
    if (y2 <= 0 || !hilbk3::pell::is_square(y2)) continue;
    Int y;
    mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
    if (y == 0) continue;
    return Solution{x, y};
  }
  return std::nullopt;
}

// |{a in (Z/2t)^x : a^2 = 1 (mod 4t)}| up to sign.
inline long fm_count_by_search(long t) {
  long count = 0, self = 0;
  for (long a = 1; a <= 2 * t; ++a) {
    if (std::gcd(a, 2 * t) != 1) continue;
    if ((Int(a) * a - 1) % (4 * t) != 0) continue;
    ++count;
    if ((2 * t - a) % (2 * t) == a % (2 * t)) ++self;
  }
  return (count + self) / 2;
}

} // namespace oracle
