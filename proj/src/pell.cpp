#include "hilbk3/pell.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace hilbk3::pell {

namespace {

constexpr long kStepCap = 4'000'000; // guards every orbit walk below

Int isqrt(const Int& v) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// floor((P + sqrt(D)) / Q) for non-square D and Q != 0, exactly.
Int cf_floor(const Int& P, const Int& Q, const Int& sqrtD) {
  Int num = P + sqrtD;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
  // For Q < 0 and Q | P + floor(sqrt(D)) the true value (P + sqrt(D))/Q lies
  // just below the rational (P + floor(sqrt(D)))/Q, so the floor drops by one.
  if (Q < 0 && mpz_divisible_p(num.get_mpz_t(), Q.get_mpz_t())) q -= 1;
  return q;
}

struct PqaHit {
  Solution sol; // (G_{i-1}, B_{i-1}) at an index i >= 1 with |Q_i| = 1
};

// Expansion of (P0 + sqrt(D))/Q0. Collects (G, B) at every index whose Q is
// +-1, walking until the (P, Q) state repeats (pre-period plus one full
// cycle covers every reachable state). Requires Q0 | D - P0^2.
std::vector<PqaHit> pqa_collect(const Int& D, const Int& P0, const Int& Q0) {
  check_internal(Q0 != 0, "pqa: Q0 = 0");
  check_internal(mpz_divisible_p(Int(D - P0 * P0).get_mpz_t(), Q0.get_mpz_t()),
                 "pqa: Q0 does not divide D - P0^2");
  Int sqrtD = isqrt(D);
  std::vector<PqaHit> hits;
  std::set<std::pair<Int, Int>> seen;

  Int P = P0, Q = Q0;
  Int B_prev2 = 1, B_prev = 0; // B_{-2}, B_{-1}
  Int G_prev2 = -P0, G_prev = Q0;
  for (long i = 0; i < kStepCap; ++i) {
    if (!seen.insert({P, Q}).second) return hits;
    Int a = cf_floor(P, Q, sqrtD);
    Int B = a * B_prev + B_prev2;
    Int G = a * G_prev + G_prev2;
    Int Pn = a * Q - P;
    Int Qn = (D - Pn * Pn) / Q;
    if (Qn == 1 || Qn == -1) hits.push_back({Solution{G, B}});
    B_prev2 = B_prev; B_prev = B;
    G_prev2 = G_prev; G_prev = G;
    P = Pn; Q = Qn;
  }
  raise(errc::internal, "pqa: state did not recur");
}

void require_nonsquare(const Int& r) {
  require(r >= 1, errc::parameter_violation, "radicand must be positive");
  require(!is_square(r), errc::square_radicand,
          "radicand " + r.get_str() + " is a perfect square");
}

// Square roots of D modulo m, normalized into (-m/2, m/2].
std::vector<Int> sqrt_roots_mod(const Int& D, const Int& m) {
  std::vector<Int> roots;
  if (m == 1) {
    roots.emplace_back(0);
    return roots;
  }
  Int Dm = D % m;
  if (Dm < 0) Dm += m;
  for (Int z = 0; z < m; ++z) {
    if ((z * z - Dm) % m == 0) {
      Int zn = z;
      if (2 * zn > m) zn -= m;
      roots.push_back(zn);
    }
  }
  return roots;
}

int sgn(const Int& v) { return mpz_sgn(v.get_mpz_t()); }

// Fundamental solution of the class of s, together with the conjugate-pair
// flag. Walks the unit orbit to the spot where Y (for m > 0) or X (for
// m < 0) changes sign; the smallest non-negative Y of the class is attained
// there.
SolutionClass canonical_class(Solution s, const Int& r, const Int& m, const Solution& unit) {
  auto fwd = [&](const Solution& v) { return next_in_class(v, unit, r); };
  auto bwd = [&](const Solution& v) { return prev_in_class(v, unit, r); };
  long guard = 0;
  auto step_guard = [&]() {
    check_internal(++guard < kStepCap, "canonical_class: walk did not terminate");
  };

  if (m > 0) {
    if (s.x < 0) s = Solution{-s.x, -s.y}; // X > 0 branch; Y strictly increases
    Solution low, high;
    if (s.y >= 0) {
      Solution cur = s;
      while (true) {
        Solution back = bwd(cur);
        if (back.y < 0) { low = back; high = cur; break; }
        cur = back;
        step_guard();
      }
    } else {
      Solution cur = s;
      while (true) {
        Solution next = fwd(cur);
        if (next.y >= 0) { low = cur; high = next; break; }
        cur = next;
        step_guard();
      }
    }
    // high has the smallest Y >= 0 on this branch, low is its predecessor;
    // the mirrored branch contributes -low with Y = -low.y.
    if (high.y == 0) return {high, true}; // (X, 0) pairs with (-X, 0)
    Int mirrored = -low.y;
    if (high.y < mirrored) return {high, false};
    if (high.y > mirrored) return {Solution{-low.x, -low.y}, false};
    return {high, true}; // conjugates (X, Y), (-X, Y); keep X > 0
  }

  // m < 0: Y > 0 branch, X strictly increases along it.
  if (s.y < 0) s = Solution{-s.x, -s.y};
  Solution low, high;
  if (s.x >= 0) {
    Solution cur = s;
    while (true) {
      Solution back = bwd(cur);
      if (back.x < 0) { low = back; high = cur; break; }
      cur = back;
      step_guard();
    }
  } else {
    Solution cur = s;
    while (true) {
      Solution next = fwd(cur);
      if (next.x >= 0) { low = cur; high = next; break; }
      cur = next;
      step_guard();
    }
  }
  if (high.x == 0) return {high, false}; // (0, Y) is its own conjugate
  if (high.y < low.y) return {high, false};
  if (high.y > low.y) return {low, false}; // fundamental with X < 0
  return {high, true};
}

void check_substitution(const Int& r, const Int& m, const Solution& s, const char* where) {
  check_internal(form_value(r, s) == m, std::string(where) + ": substitution check failed");
}

// Unit-interval bounds on a fundamental solution:
// 2*(z+sigma)*Y^2 <= w^2*|m| with sigma = +1 for m > 0 and -1 for m < 0
// (the |X| bound follows from this one).
void check_fundamental_bounds(const Int& m, const Solution& s, const Solution& unit) {
  Int am = abs(m);
  Int zshift = (m > 0) ? Int(unit.x + 1) : Int(unit.x - 1);
  check_internal(2 * zshift * s.y * s.y <= unit.y * unit.y * am,
                 "fundamental solution outside the unit-interval bound");
  check_internal(s.y >= 0, "fundamental solution with negative Y");
}

} // namespace

Int form_value(const Int& r, const Solution& s) { return s.x * s.x - r * s.y * s.y; }

bool is_square(const Int& v) {
  return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

UnitInfo unit_info(const Int& r) {
  require(r >= 2, errc::parameter_violation, "unit_info: radicand must be >= 2");
  require_nonsquare(r);
  auto hits = pqa_collect(r, 0, 1);
  check_internal(!hits.empty(), "unit_info: no unit found on sqrt expansion");
  const Solution& first = hits.front().sol;
  Int v = form_value(r, first);
  UnitInfo info;
  if (v == 1) {
    info.plus = first;
  } else {
    check_internal(v == -1, "unit_info: unexpected form value");
    info.minus = first;
    info.plus = Solution{first.x * first.x + r * first.y * first.y, 2 * first.x * first.y};
  }
  check_substitution(r, 1, info.plus, "unit_info");
  check_internal(info.plus.x > 0 && info.plus.y > 0, "unit_info: unit not positive");
  return info;
}

Solution fundamental_unit(const Int& r) { return unit_info(r).plus; }

std::optional<Solution> negative_pell(const Int& r) { return unit_info(r).minus; }

Solution next_in_class(const Solution& s, const Solution& unit, const Int& r) {
  return {unit.x * s.x + r * unit.y * s.y, unit.y * s.x + unit.x * s.y};
}

Solution prev_in_class(const Solution& s, const Solution& unit, const Int& r) {
  return {unit.x * s.x - r * unit.y * s.y, unit.x * s.y - unit.y * s.x};
}

bool equivalent(const Solution& a, const Solution& b, const Int& r, const Int& m) {
  check_internal(m != 0, "equivalent: m = 0");
  Int u = a.x * b.x - r * a.y * b.y;
  Int v = a.x * b.y - b.x * a.y;
  return mpz_divisible_p(u.get_mpz_t(), m.get_mpz_t()) &&
         mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t());
}

std::vector<SolutionClass> fundamental_solutions(const Equation& eq) {
  require(eq.m != 0, errc::parameter_violation, "fundamental_solutions: m = 0");
  require_nonsquare(eq.r);
  UnitInfo unit = unit_info(eq.r);

  std::set<std::pair<Int, Int>> seen;
  std::vector<SolutionClass> classes;
  Int am_total = abs(eq.m);
  for (Int f = 1; f * f <= am_total; ++f) {
    if (!mpz_divisible_p(am_total.get_mpz_t(), Int(f * f).get_mpz_t())) continue;
    Int m_red = eq.m / (f * f);
    Int am = abs(m_red);
    for (const Int& z : sqrt_roots_mod(eq.r, am)) {
      for (const PqaHit& hit : pqa_collect(eq.r, z, am)) {
        Solution s = hit.sol;
        Int v = form_value(eq.r, s);
        if (v == -m_red) {
          if (!unit.minus) continue;
          s = next_in_class(s, *unit.minus, eq.r);
          v = form_value(eq.r, s);
        }
        if (v != m_red) continue;
        Solution scaled{f * s.x, f * s.y};
        SolutionClass cls = canonical_class(scaled, eq.r, eq.m, unit.plus);
        if (seen.insert({cls.fundamental.x, cls.fundamental.y}).second) {
          check_substitution(eq.r, eq.m, cls.fundamental, "fundamental_solutions");
          check_fundamental_bounds(eq.m, cls.fundamental, unit.plus);
          classes.push_back(cls);
        }
      }
    }
  }

  std::sort(classes.begin(), classes.end(), [](const SolutionClass& a, const SolutionClass& b) {
    Int ax = abs(a.fundamental.x), bx = abs(b.fundamental.x);
    if (ax != bx) return ax < bx;
    if (a.fundamental.y != b.fundamental.y) return a.fundamental.y < b.fundamental.y;
    return sgn(a.fundamental.x) < sgn(b.fundamental.x);
  });
  return classes;
}

Solution min_unit_with_congruence(long n, long t) {
  require(n >= 2, errc::parameter_violation, "min_unit_with_congruence: n must be >= 2");
  require(t >= 1, errc::parameter_violation, "min_unit_with_congruence: t must be >= 1");
  Int r = Int(t) * Int(n - 1);
  Solution z = fundamental_unit(r);
  Int mod = n - 1;
  if (mod > 1) {
    Int res = z.x % mod;
    if (res != 1 && res != mod - 1) {
      z = next_in_class(z, z, r);
      Int res2 = z.x % mod;
      check_internal(res2 == 1, "squared unit must be 1 mod n-1");
    }
  }
  check_substitution(r, 1, z, "min_unit_with_congruence");
  return z;
}

namespace {

// First solution of the class of `fund` with X > 0 and Y > 0. Positive
// solutions of a class form a single forward orbit ordered by X.
Solution first_positive(Solution s, const Int& r, const Int& m, const Solution& unit) {
  long guard = 0;
  if (m > 0) {
    if (s.x < 0) s = Solution{-s.x, -s.y};
    while (s.y <= 0) {
      s = next_in_class(s, unit, r);
      check_internal(++guard < kStepCap, "first_positive: walk did not terminate");
    }
  } else {
    if (s.y < 0) s = Solution{-s.x, -s.y};
    while (s.x <= 0) {
      s = next_in_class(s, unit, r);
      check_internal(++guard < kStepCap, "first_positive: walk did not terminate");
    }
  }
  check_internal(s.x > 0 && s.y > 0, "first_positive: not positive");
  return s;
}

std::optional<Solution> solve_skew_square(const Int& A, const Int& B, int c) {
  // (A*X - s*Y)(A*X + s*Y) = c*A with s = sqrt(AB): finitely many divisor
  // splits of c*A.
  Int s = isqrt(A * B);
  Int N = c * A;
  std::optional<Solution> best;
  Int aN = abs(N);
  for (Int d1 = 1; d1 * d1 <= aN; ++d1) {
    if (!mpz_divisible_p(aN.get_mpz_t(), d1.get_mpz_t())) continue;
    Int d2 = aN / d1;
    for (int sign : {1, -1}) {
      // (lo, hi) = (sign*d1*c', ...) enumerate both factor orders and signs
      for (auto [lo, hi] : {std::pair<Int, Int>{sign * d1, N / (sign * d1)},
                            std::pair<Int, Int>{sign * d2, N / (sign * d2)}}) {
        Int twoU = lo + hi, twoSY = hi - lo;
        if (twoU <= 0 || twoSY <= 0) continue;
        if (twoU % 2 != 0 || twoSY % 2 != 0) continue;
        Int U = twoU / 2, sy = twoSY / 2;
        if (!mpz_divisible_p(U.get_mpz_t(), A.get_mpz_t())) continue;
        if (s == 0 || !mpz_divisible_p(sy.get_mpz_t(), s.get_mpz_t())) continue;
        Solution cand{U / A, sy / s};
        if (cand.x <= 0 || cand.y <= 0) continue;
        if (!best || cand.x < best->x) best = cand;
      }
    }
  }
  if (best) {
    check_internal(A * best->x * best->x - B * best->y * best->y == c,
                   "solve_skew: square-radicand candidate does not solve the equation");
  }
  return best;
}

} // namespace

std::optional<Solution> solve_skew(const Int& A, const Int& B, int c) {
  require(A >= 1 && B >= 1, errc::parameter_violation, "solve_skew: A, B must be positive");
  require(c == 1 || c == -1, errc::parameter_violation, "solve_skew: c must be +-1");
  Int AB = A * B;
  if (is_square(AB)) return solve_skew_square(A, B, c);

  Int m = c * A;
  Equation eq{AB, m};
  auto classes = fundamental_solutions(eq);
  if (classes.empty()) return std::nullopt;
  Solution unit = fundamental_unit(AB);

  std::optional<Solution> best;
  for (const SolutionClass& cls : classes) {
    Solution s = first_positive(cls.fundamental, AB, m, unit);
    // Scan one full period of the orbit mod A for A | U; X grows strictly,
    // so the first admissible hit is the class minimum.
    Int x0 = s.x % A, y0 = s.y % A;
    long guard = 0;
    bool first = true;
    while (true) {
      if (mpz_divisible_p(s.x.get_mpz_t(), A.get_mpz_t())) {
        Solution cand{s.x / A, s.y};
        if (!best || cand.x < best->x) best = cand;
        break;
      }
      s = next_in_class(s, unit, AB);
      if (!first && s.x % A == x0 && s.y % A == y0) break;
      first = false;
      check_internal(++guard < kStepCap, "solve_skew: orbit scan did not terminate");
    }
  }
  if (best) {
    check_internal(A * best->x * best->x - B * best->y * best->y == c,
                   "solve_skew: candidate does not solve the equation");
  }
  return best;
}

} // namespace hilbk3::pell
