#include "hilbk3/ambiguity.hpp"

#include "hilbk3/cones.hpp"

namespace hilbk3 {

namespace {

long omega(long v) {
  if (v == 1) return 1; // by convention
  long count = 0;
  for (long p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      ++count;
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) ++count;
  return count;
}

// Part of v supported on the primes of base.
Int extract_supported(Int v, const Int& base) {
  Int part = 1;
  while (true) {
    Int g;
    mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), base.get_mpz_t());
    if (g == 1) return part;
    part *= g;
    v /= g;
  }
}

bool residue_is_pm(const Int& x, long alpha, long mod) {
  Int r = x % mod;
  if (r < 0) r += mod;
  Int a = alpha % mod;
  return r == a || r == (mod - a) % mod;
}

// Biregularity recomputed from the slope condition: for every parameter
// pair with max(4*rho+1, ceil(2*sqrt(rho(n-1)))) <= alpha <= n-1 (and the
// rho = -1, rho = 0 rows), the minimal congruent positive solution of
// X^2 - 4t(n-1)Y^2 = rhs must satisfy Y/X >= w/(2z). Equivalently: no pair
// contributes a wall. Returns true when none does.
bool biregular_by_slopes(const HilbParams& p, const pell::Solution& zw) {
  Int D = 4 * Int(p.t) * (p.n - 1);
  pell::Solution unit = pell::fundamental_unit(D);
  for (const WallParams& wp : wall_family(p.n)) {
    if (wp.rho >= 1) {
      // ceil(2*sqrt(rho(n-1))) <= alpha, the sharpened lower bound
      Int bound = 4 * Int(wp.rho) * (p.n - 1);
      Int s;
      mpz_sqrt(s.get_mpz_t(), bound.get_mpz_t());
      if (s * s < bound) s += 1;
      if (Int(wp.alpha) < s) continue;
    }
    if (wp.rhs <= 0) continue;
    for (const pell::SolutionClass& cls : pell::fundamental_solutions({D, Int(wp.rhs)})) {
      pell::Solution s = cls.fundamental;
      if (s.x < 0) s = {-s.x, -s.y};
      long guard = 0;
      while (s.y <= 0) {
        s = pell::next_in_class(s, unit, D);
        check_internal(++guard < 100000, "biregular_by_slopes: walk stuck");
      }
      while (2 * zw.x * s.y < zw.y * s.x) {
        if (residue_is_pm(s.x, wp.alpha, 2 * (p.n - 1))) return false;
        s = pell::next_in_class(s, unit, D);
        check_internal(++guard < 100000, "biregular_by_slopes: walk stuck");
      }
    }
  }
  return true;
}

} // namespace

Int fm_partner_count(long t) {
  require(t >= 1, errc::parameter_violation, "fm_partner_count: t must be >= 1");
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), omega(t) - 1);
  return r;
}

AmbiguityReport ambiguity(const HilbParams& p, bool verify) {
  AmbiguityReport rep;
  rep.n = p.n;
  rep.t = p.t;
  rep.fm_partners = fm_partner_count(p.t);

  Int r = Int(p.t) * (p.n - 1);
  if (pell::is_square(r)) return rep;
  if (p.n != 2 && pell::solve_skew(p.n - 1, p.t, 1)) return rep;
  pell::Solution zw = pell::min_unit_with_congruence(p.n, p.t);
  if (zw.y % 2 != 0) return rep;
  long mod = 2 * (p.n - 1);
  Int res = zw.x % mod;
  if (res != 1 && res != mod - 1) return rep;
  rep.exists_noninduced_map = true;

  // isomorphic partner iff z = +-1 (mod 2t)
  Int res2t = zw.x % (2 * p.t);
  rep.partner_isomorphic_to_s = (res2t == 1 || res2t == 2 * p.t - 1);

  // label via z = 2(n-1)k + eps, w = 2h', k = s*p^2, k(n-1) + eps = r*q^2
  int eps = (res == 1) ? 1 : -1;
  Int k = (zw.x - eps) / mod;
  Int mfac = k * (p.n - 1) + eps;
  Int hp = zw.y / 2;
  PartnerLabel label;
  label.p = extract_supported(hp, k);
  label.q = hp / label.p;
  check_internal(mpz_divisible_p(k.get_mpz_t(), Int(label.p * label.p).get_mpz_t()),
                 "ambiguity: p^2 does not divide k");
  label.s = k / (label.p * label.p);
  check_internal(mpz_divisible_p(mfac.get_mpz_t(), Int(label.q * label.q).get_mpz_t()),
                 "ambiguity: q^2 does not divide k(n-1) + eps");
  label.r = mfac / (label.q * label.q);
  check_internal(label.r * label.s == p.t, "ambiguity: label violates t = rs");
  check_internal((p.n - 1) * label.s * label.p * label.p - label.r * label.q * label.q == -eps,
                 "ambiguity: label violates (n-1)sp^2 - rq^2 = +-1");
  rep.partner_label = label;

  long chambers = decompose(p).chamber_count;
  rep.map_biregular = chambers == 1;
  if (verify) {
    bool by_slopes = biregular_by_slopes(p, zw);
    check_internal(by_slopes == *rep.map_biregular,
                   "ambiguity: slope route disagrees with the chamber count at n=" +
                       std::to_string(p.n) + " t=" + std::to_string(p.t));
  }
  return rep;
}

} // namespace hilbk3
