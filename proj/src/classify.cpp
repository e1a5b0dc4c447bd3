#include "hilbk3/classify.hpp"

#include <algorithm>

#include "hilbk3/cones.hpp"

namespace hilbk3 {

namespace {

bool is_pm1_mod(const Int& x, long mod) {
  if (mod <= 1) return true;
  Int r = x % mod;
  if (r < 0) r += mod;
  return r == 1 || r == mod - 1;
}

// +1 / -1 when x is congruent to 1 / -1 modulo mod, 0 otherwise; modulus 2
// is ambiguous and resolves to +1.
int pm1_label(const Int& x, long mod) {
  Int r = x % mod;
  if (r < 0) r += mod;
  if (r == 1) return 1;
  if (r == mod - 1) return -1;
  return 0;
}

long omega(long v) {
  check_internal(v >= 1, "omega of a nonpositive integer");
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

bool neg_one_is_qr(long m) {
  check_internal(m >= 1, "quadratic residue modulo a nonpositive integer");
  if (m <= 2) return true;
  if (m % 4 == 0) return false;
  if (m % 2 == 0) m /= 2;
  for (long p = 3; p * p <= m; p += 2) {
    if (m % p == 0) {
      if (p % 4 == 3) return false;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1 && m % 4 == 3) return false;
  return true;
}

Int pow2(long e) {
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

} // namespace

std::string to_string(Group g) {
  switch (g) {
    case Group::Trivial: return "trivial";
    case Group::Z2: return "Z2";
    case Group::Z2xZ2: return "Z2xZ2";
  }
  return "?";
}

std::string to_string(InvariantLattice d, long n) {
  switch (d) {
    case InvariantLattice::None: return "";
    case InvariantLattice::Two: return "<2>";
    case InvariantLattice::TwoN2: return "<" + std::to_string(2 * (n - 1)) + ">";
    case InvariantLattice::CoinvTwoN2:
      return "coinvariant <-" + std::to_string(2 * (n - 1)) + ">";
  }
  return "";
}

std::optional<CaseJK> congruence_case(const HilbParams& p) {
  require(p.t >= 2, errc::parameter_violation, "congruence_case: t must be >= 2");
  Int r = Int(p.t) * (p.n - 1);
  if (pell::is_square(r)) return std::nullopt;
  pell::Solution zw = pell::min_unit_with_congruence(p.n, p.t);
  if (zw.y % 2 != 0) return std::nullopt;
  int j = pm1_label(zw.x, 2 * (p.n - 1));
  int k = pm1_label(zw.x, 2 * p.t);
  if (j == 0 || k == 0) return std::nullopt;
  if (j == -1 && k == 1) {
    // this label forces (n-1)X^2 - tY^2 = 1 solvable, which destroys the
    // movable-cone shape; verified rather than assumed
    check_internal(p.n >= 3 && pell::solve_skew(p.n - 1, p.t, 1).has_value(),
                   "label (-1,1) without a solvable (n-1)X^2 - tY^2 = 1");
    return std::nullopt;
  }
  return CaseJK{j, k};
}

NonNaturalInfo nonnatural_info(const HilbParams& p) {
  NonNaturalInfo info;
  if (p.t >= 2) {
    auto cj = congruence_case(p);
    if (!cj) return info;
    info.exists = true;
    info.case_jk = cj;
    Int r = Int(p.t) * (p.n - 1);
    if (cj->j == 1 && cj->k == -1) {
      auto ab = pell::solve_skew(p.n - 1, p.t, -1);
      check_internal(ab.has_value(), "(1,-1) without a solvable (n-1)X^2 - tY^2 = -1");
      info.a = ab->x;
      info.b = ab->y;
      info.ell = 1;
      info.nu = {info.b, -info.a};
    } else if (cj->j == -1 && cj->k == -1) {
      auto ab = pell::negative_pell(r);
      check_internal(ab.has_value(), "(-1,-1) without a solvable X^2 - t(n-1)Y^2 = -1");
      info.a = ab->x;
      info.b = ab->y;
      info.ell = p.n - 1;
      info.nu = {Int(p.n - 1) * info.b, -info.a};
    } else {
      pell::Solution ba = pell::fundamental_unit(r);
      info.b = ba.x;
      info.a = ba.y;
      info.ell = p.t;
      info.nu = {info.b, -Int(p.t) * info.a};
      info.symplectic = true;
    }
    return info;
  }

  // t = 1: the natural involution always exists; a non-natural pair of
  // involutions exists iff n-1 is non-square and the minimal positive
  // solution (a, b) of (n-1)X^2 - Y^2 = -1 has b != +-1 (mod n-1).
  if (pell::is_square(Int(p.n - 1))) return info;
  auto ab = pell::solve_skew(p.n - 1, 1, -1);
  check_internal(ab.has_value(), "(n-1)X^2 - Y^2 = -1 must be solvable for non-square n-1");
  if (is_pm1_mod(ab->y, p.n - 1)) return info;
  info.exists = true;
  info.t1_two_generators = true;
  info.a = ab->x;
  info.b = ab->y;
  info.ell = 1;
  info.nu = {info.b, -info.a};
  return info;
}

BirClassification classify(const HilbParams& p) {
  BirClassification c;
  c.n = p.n;
  c.t = p.t;
  NonNaturalInfo info = nonnatural_info(p);

  if (!cone_applicability(p)) {
    c.decomposition = decompose(p);
    c.chamber_count = c.decomposition->chamber_count;
  }

  if (p.t == 1) {
    c.aut_group = Group::Z2; // the natural involution
    if (!info.exists) {
      c.group = Group::Z2;
      c.natural_only = true;
      return c;
    }
    c.group = Group::Z2xZ2;
    c.case_jk = std::nullopt;
    c.symplectic = {true, false}; // one generator of each type
    c.nu = info.nu;
    c.invariant = InvariantLattice::Two;
  } else {
    if (!info.exists) {
      c.group = Group::Trivial;
      c.aut_group = Group::Trivial;
      return c;
    }
    c.group = Group::Z2;
    c.case_jk = info.case_jk;
    c.symplectic = {info.symplectic};
    c.transcendental_action = info.symplectic ? 1 : -1;
    c.nu = info.nu;
    c.invariant = info.symplectic            ? InvariantLattice::CoinvTwoN2
                  : info.case_jk->j == 1     ? InvariantLattice::Two
                                             : InvariantLattice::TwoN2;
  }

  check_internal(c.chamber_count.has_value(),
                 "movable cone must apply when a non-natural automorphism exists");
  long d = *c.chamber_count;
  c.biregular = d == 1;
  c.regularizable = d % 2 == 1;
  c.irregular = d % 2 == 0;
  c.not_hilbert_model = info.exists && !c.biregular && c.regularizable;
  if (p.t >= 2) c.aut_group = c.biregular ? Group::Z2 : Group::Trivial;

  // fixed-axis consistency
  DivisorClass axis = reflection_fix_axis(p);
  check_internal(axis == *c.nu, "nu differs from the reflection axis");
  Int sq = bbf_square(p, *c.nu);
  check_internal(sq == 2 * Int(info.ell), "nu^2 differs from 2*ell");
  return c;
}

FamilyValue family_t(FamilyKind kind, long n, long k, long q, long h) {
  require(n >= 2, errc::parameter_violation, "family_t: n must be >= 2");
  require(k >= 1, errc::parameter_violation, "family_t: k must be >= 1");
  // the two residues modulo 2(n-1) = 2 coincide for n = 2 and the label
  // resolves to +1 there
  switch (kind) {
    case FamilyKind::Inv2:
      return {(n - 1) * k * k + 1, CaseJK{1, -1}};
    case FamilyKind::Inv2N2: {
      require(q >= 1, errc::parameter_violation, "family_t: q must be >= 1");
      require((q * q + 1) % (n - 1) == 0, errc::parameter_violation,
              "family_t: q^2 must be -1 modulo n-1");
      return {(n - 1) * k * k + 2 * q * k + (q * q + 1) / (n - 1),
              CaseJK{n == 2 ? 1 : -1, -1}};
    }
    case FamilyKind::Sympl: {
      require(q >= 3, errc::parameter_violation, "family_t: q must be >= 3");
      require(h >= 1, errc::parameter_violation, "family_t: h must be >= 1");
      require(h * (n - 1) == q * q - 1, errc::parameter_violation,
              "family_t: n-1 must equal (q^2-1)/h");
      require(h % (q - 1) != 0, errc::parameter_violation,
              "family_t: h must not vanish modulo q-1");
      require(h % (q + 1) != 0, errc::parameter_violation,
              "family_t: h must not vanish modulo q+1");
      return {(n - 1) * k * k + 2 * q * k + h, CaseJK{1, 1}};
    }
  }
  raise(errc::parameter_violation, "family_t: unknown kind");
}

ConjectureReport conjecture_check(long n_max, long k_max) {
  require(n_max >= 2, errc::parameter_violation, "conjecture_check: n_max must be >= 2");
  require(k_max >= 3, errc::parameter_violation, "conjecture_check: k_max must be >= 3");
  ConjectureReport report;
  report.n_max = n_max;
  report.k_max = k_max;
  for (long n = 2; n <= n_max; ++n) {
    for (long k = 3; k <= k_max; ++k) {
      long t = family_t(FamilyKind::Inv2, n, k).t;
      BirClassification c = classify(HilbParams(n, t));
      check_internal(c.group == Group::Z2 && c.case_jk && *c.case_jk == CaseJK{1, -1},
                     "degree family (n-1)k^2+1 must give a non-symplectic involution");
      ++report.cells;
      if (!c.biregular) report.counterexamples.push_back({n, k, t});
    }
  }
  return report;
}

std::optional<Int> moduli_components(long n, Polarization pol) {
  require(n >= 2, errc::parameter_violation, "moduli_components: n must be >= 2");
  switch (pol) {
    case Polarization::Square2Div1:
      return Int(1);
    case Polarization::Square2Div2:
      if (n % 4 != 0) return std::nullopt;
      return Int(1);
    case Polarization::Square2N2DivN1: {
      long m = n - 1;
      if (!neg_one_is_qr(m)) return std::nullopt;
      if (n % 2 == 0) return pow2(omega(m) - 1);
      if (n % 4 == 1) return pow2(omega(m / 4));
      return pow2(omega(m / 2) - 1);
    }
  }
  raise(errc::parameter_violation, "moduli_components: unknown polarization");
}

bool same_component(long n, long t1, long t2) {
  require(n >= 2, errc::parameter_violation, "same_component: n must be >= 2");
  Int a[2];
  long ts[2] = {t1, t2};
  for (int i = 0; i < 2; ++i) {
    std::string tag = "t" + std::to_string(i + 1) + " = " + std::to_string(ts[i]);
    require(ts[i] >= 2, errc::not_applicable, "same_component: " + tag + " must be >= 2");
    Int r = Int(ts[i]) * (n - 1);
    require(!pell::is_square(r), errc::not_applicable,
            "same_component: " + tag + " has square t(n-1)");
    auto neg = pell::negative_pell(r);
    require(neg.has_value(), errc::not_applicable,
            "same_component: " + tag + " has no solution of X^2 - t(n-1)Y^2 = -1");
    BirClassification c = classify(HilbParams(n, ts[i]));
    require(c.group != Group::Trivial && c.biregular, errc::not_applicable,
            "same_component: " + tag + " carries no biregular non-natural automorphism");
    a[i] = neg->x;
  }
  if (n == 2) return true;
  Int diff = a[0] - a[1], sum = a[0] + a[1];
  Int mod = n - 1;
  return mpz_divisible_p(diff.get_mpz_t(), mod.get_mpz_t()) ||
         mpz_divisible_p(sum.get_mpz_t(), mod.get_mpz_t());
}

} // namespace hilbk3
