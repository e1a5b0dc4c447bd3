#include "hilbk3/cones.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hilbk3/classify.hpp"

namespace hilbk3 {

namespace {

constexpr long kOrbitCap = 100000;

bool residue_is_pm(const Int& x, long alpha, long mod) {
  Int r = x % mod;
  if (r < 0) r += mod;
  Int a = alpha % mod;
  return r == a || r == (mod - a) % mod;
}

// slope(Y/X) of a < slope of b, all coordinates positive
bool slope_less(const pell::Solution& a, const pell::Solution& b) {
  return a.y * b.x < b.y * a.x;
}

} // namespace

std::vector<WallParams> wall_family(long n) {
  require(n >= 2, errc::parameter_violation, "wall_family: n must be >= 2");
  std::vector<WallParams> out;
  auto push = [&](long rho, long alpha) {
    long rhs = alpha * alpha - 4 * rho * (n - 1);
    out.push_back({rho, alpha, rhs, rhs > 0});
  };
  for (long alpha = 1; alpha <= n - 1; ++alpha) push(-1, alpha);
  for (long alpha = 3; alpha <= n - 1; ++alpha) push(0, alpha);
  for (long rho = 1; 4 * rho < n - 1; ++rho)
    for (long alpha = 4 * rho + 1; alpha <= n - 1; ++alpha) push(rho, alpha);
  return out;
}

std::optional<std::string> cone_applicability(const HilbParams& p) {
  Int r = Int(p.t) * (p.n - 1);
  if (pell::is_square(r))
    return "SquareRadicand: t(n-1) = " + r.get_str() + " is a perfect square";
  if (p.n != 2 && pell::solve_skew(p.n - 1, p.t, 1))
    return "SkewUnitSolvable: (n-1)X^2 - tY^2 = 1 has integer solutions";
  return std::nullopt;
}

std::pair<DivisorClass, DivisorClass> movable_cone(const HilbParams& p) {
  if (auto reason = cone_applicability(p))
    raise(errc::not_applicable, "movable_cone: " + *reason);
  pell::Solution zw = pell::min_unit_with_congruence(p.n, p.t);
  return {DivisorClass{1, 0}, primitive({zw.x, -Int(p.t) * zw.y})};
}

ChamberDecomposition decompose(const HilbParams& p) {
  if (auto reason = cone_applicability(p))
    raise(errc::not_applicable, "decompose: " + *reason);

  pell::Solution zw = pell::min_unit_with_congruence(p.n, p.t);
  Int D = 4 * Int(p.t) * (p.n - 1);
  pell::Solution unit = pell::fundamental_unit(D);

  ChamberDecomposition dec;
  dec.extremal_low = {1, 0};
  dec.extremal_high = primitive({zw.x, -Int(p.t) * zw.y});

  std::map<long, std::vector<pell::SolutionClass>> class_cache;
  std::set<std::pair<Int, Int>> seen_rays;

  for (const WallParams& wp : wall_family(p.n)) {
    if (!wp.active) continue;
    auto [it, fresh] = class_cache.try_emplace(wp.rhs);
    if (fresh) it->second = pell::fundamental_solutions({D, Int(wp.rhs)});
    for (const pell::SolutionClass& cls : it->second) {
      // walk the positive solutions of the class while the slope stays
      // below the upper extremal ray (Y/X < w/(2z))
      pell::Solution s = cls.fundamental;
      if (s.x < 0) s = {-s.x, -s.y};
      long guard = 0;
      while (s.y <= 0) {
        s = pell::next_in_class(s, unit, D);
        check_internal(++guard < kOrbitCap, "decompose: positive walk stuck");
      }
      while (2 * zw.x * s.y < zw.y * s.x) {
        if (residue_is_pm(s.x, wp.alpha, 2 * (p.n - 1))) {
          DivisorClass ray = primitive({s.x, -2 * Int(p.t) * s.y});
          if (seen_rays.insert({ray.x, ray.y}).second)
            dec.walls.push_back({ray, wp, s});
          else
            dec.duplicate_sources.push_back(wp);
        }
        s = pell::next_in_class(s, unit, D);
        check_internal(++guard < kOrbitCap, "decompose: slope walk stuck");
      }
    }
  }

  std::sort(dec.walls.begin(), dec.walls.end(),
            [](const Wall& a, const Wall& b) { return slope_less(a.witness, b.witness); });
  dec.chamber_count = (long)dec.walls.size() + 1;
  return dec;
}

IrregularityCertificate is_n_irregular(const HilbParams& p) {
  IrregularityCertificate cert;
  NonNaturalInfo info = nonnatural_info(p);
  if (!info.exists) {
    cert.irregular = false;
    cert.path = IrregularityPath::NoAutomorphism;
    return cert;
  }

  ChamberDecomposition dec = decompose(p);
  cert.chamber_count = dec.chamber_count;
  bool even = dec.chamber_count % 2 == 0;

  if (p.t == 1 || info.symplectic) {
    // the fixed axis b*h - ta*delta always lies on an interior wall
    cert.irregular = true;
    cert.path = IrregularityPath::SymplecticOrDegreeOne;
    check_internal(even, "degree-one/symplectic case must have even chambers");
    return cert;
  }

  // non-symplectic, t >= 2: search for (alpha, rho) and a positive solution
  // with 4*t*ell*Y^2 = rhs*a^2; existence is equivalent to even chambers
  Int den = 4 * Int(p.t) * info.ell;
  for (const WallParams& wp : wall_family(p.n)) {
    if (!wp.active) continue;
    Int num = Int(wp.rhs) * info.a * info.a;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
    Int y2 = num / den;
    if (!pell::is_square(y2)) continue;
    Int y;
    mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
    if (y == 0) continue;
    Int x2 = 4 * Int(p.t) * (p.n - 1) * y2 + wp.rhs;
    if (!pell::is_square(x2)) continue;
    Int x;
    mpz_sqrt(x.get_mpz_t(), x2.get_mpz_t());
    if (!residue_is_pm(x, wp.alpha, 2 * (p.n - 1))) continue;
    cert.witness = WallWitness{info.ell, info.a, wp.alpha, wp.rho, x, y};
    break;
  }

  check_internal(cert.witness.has_value() == even,
                 "wall-witness and chamber-parity paths disagree at n=" +
                     std::to_string(p.n) + " t=" + std::to_string(p.t));
  cert.irregular = even;
  cert.path = cert.witness ? IrregularityPath::WallWitness : IrregularityPath::OddChambers;
  return cert;
}

std::vector<IrregularValue> scan_irregular(long n, ScanMode mode, long t_max) {
  require(n >= 2, errc::parameter_violation, "scan_irregular: n must be >= 2");
  long bound = (n - 1) * (n + 3);
  if (t_max < 0) t_max = 10 * bound;

  // candidates from rhs = t*ell*r^2 over the divisors of each positive rhs
  std::set<long> candidates;
  for (const WallParams& wp : wall_family(n)) {
    if (!wp.active) continue;
    for (long d = 1; d * d <= wp.rhs; ++d) {
      if (wp.rhs % d != 0) continue;
      for (long div : {d, wp.rhs / d}) {
        if (!pell::is_square(Int(wp.rhs / div))) continue;
        for (long ell : {1L, n - 1}) {
          if (div % ell != 0) continue;
          long tcand = div / ell;
          if (tcand >= 1 && tcand <= bound) candidates.insert(tcand);
        }
      }
    }
  }

  std::vector<IrregularValue> out;
  auto ell_of = [&](const NonNaturalInfo& info) { return info.ell; };

  for (long t : candidates) {
    HilbParams p(n, t);
    NonNaturalInfo info = nonnatural_info(p);
    if (!info.exists) continue;
    if (mode == ScanMode::NonsymplecticFinite && p.t >= 2 && info.symplectic)
      continue; // belongs to the infinite symplectic family
    if (is_n_irregular(p).irregular) out.push_back({t, ell_of(info)});
  }

  if (mode == ScanMode::FullRange) {
    std::set<long> have;
    for (auto& v : out) have.insert(v.t);
    for (long t = 1; t <= t_max; ++t) {
      if (have.count(t)) continue;
      HilbParams p(n, t);
      NonNaturalInfo info = nonnatural_info(p);
      if (!info.exists) continue;
      if (t == 1 || info.symplectic) {
        IrregularityCertificate cert = is_n_irregular(p);
        check_internal(cert.irregular, "degree-one/symplectic value must be irregular");
        out.push_back({t, ell_of(info)});
      }
    }
    std::erase_if(out, [&](const IrregularValue& v) { return v.t > t_max; });
  }

  std::sort(out.begin(), out.end(),
            [](const IrregularValue& a, const IrregularValue& b) { return a.t < b.t; });
  return out;
}

N3ClassCounts n3_class_counts(long t) {
  require(t >= 1, errc::parameter_violation, "n3_class_counts: t must be >= 1");
  require(t >= 2, errc::not_applicable, "n3_class_counts: requires t >= 2");
  Int twot = 2 * Int(t);
  require(!pell::is_square(twot), errc::not_applicable, "n3_class_counts: 2t is a perfect square");
  require(!pell::solve_skew(2, t, 1).has_value(), errc::not_applicable,
          "n3_class_counts: 2X^2 - tY^2 = 1 has integer solutions");
  pell::Solution unit = pell::fundamental_unit(twot);
  require(unit.y % 2 == 0, errc::not_applicable,
          "n3_class_counts: fundamental unit of 2t has odd Y");

  Int D = 8 * Int(t);
  long c9 = (long)pell::fundamental_solutions({D, 9}).size();
  long c12 = (long)pell::fundamental_solutions({D, 12}).size();
  return {c9, c12, c9 + c12};
}

} // namespace hilbk3
