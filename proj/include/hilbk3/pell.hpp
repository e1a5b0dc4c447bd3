#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hilbk3/errors.hpp"

namespace hilbk3::pell {

using Int = mpz_class;

// The quadratic diophantine equation X^2 - r*Y^2 = m ("standard" when m = 1).
struct Equation {
  Int r; // radicand, r >= 1
  Int m; // right-hand side, m != 0
};

struct Solution {
  Int x;
  Int y;
};

inline bool operator==(const Solution& a, const Solution& b) { return a.x == b.x && a.y == b.y; }

// One equivalence class of solutions, represented by its fundamental
// solution: the member with smallest non-negative Y, resolved to X > 0 when
// that Y is attained by the conjugate pair (X, Y), (-X, Y).
struct SolutionClass {
  Solution fundamental;
  bool conjugate_pair; // true when the smallest-Y member was such a pair
};

// X^2 - r*Y^2 evaluated exactly.
Int form_value(const Int& r, const Solution& s);

bool is_square(const Int& v);

// Minimal positive solution (z, w) of X^2 - r*Y^2 = 1, by the continued
// fraction expansion of sqrt(r). Throws square_radicand for square r.
Solution fundamental_unit(const Int& r);

// Minimal positive solution of X^2 - r*Y^2 = -1, or empty when the
// expansion of sqrt(r) has even period (the equation is then unsolvable).
std::optional<Solution> negative_pell(const Int& r);

// Fundamental unit and, when it exists, the minimal -1 solution, from a
// single expansion of sqrt(r).
struct UnitInfo {
  Solution plus;
  std::optional<Solution> minus;
};
UnitInfo unit_info(const Int& r);

// All equivalence classes of X^2 - r*Y^2 = m, one SolutionClass per class,
// ordered by (|X|, Y, sign X). Every returned fundamental satisfies the
// bounds 0 < |X| <= sqrt((z+1)m/2), 0 <= Y <= w*sqrt(m/(2(z+1))) for m > 0
// (and the analogous z-1 bounds for m < 0), where (z, w) is the fundamental
// unit; this is checked on return.
std::vector<SolutionClass> fundamental_solutions(const Equation& eq);

// Unit action on a solution: (x, y) -> (a*x + r*b*y, b*x + a*y) for a unit
// (a, b). Maps solutions of X^2 - r*Y^2 = m to equivalent ones.
Solution next_in_class(const Solution& s, const Solution& unit, const Int& r);

// Inverse unit step, i.e. next_in_class with (a, -b).
Solution prev_in_class(const Solution& s, const Solution& unit, const Int& r);

// Equivalence test: (X*X' - r*Y*Y')/m and (X*Y' - X'*Y)/m both integral.
bool equivalent(const Solution& a, const Solution& b, const Int& r, const Int& m);

// Minimal positive solution (z, w) of X^2 - t(n-1)*Y^2 = 1 with
// z = +-1 (mod n-1); equal to the fundamental unit or to its square.
Solution min_unit_with_congruence(long n, long t);

// Minimal positive solution (X, Y) of A*X^2 - B*Y^2 = c, c = +-1, or empty.
// Solved through U^2 - AB*Y^2 = c*A with A | U; square AB is handled by the
// finite factorization (sqrt(AB)*Y -+ U)(sqrt(AB)*Y +- U) = -c*A.
std::optional<Solution> solve_skew(const Int& A, const Int& B, int c);

} // namespace hilbk3::pell
