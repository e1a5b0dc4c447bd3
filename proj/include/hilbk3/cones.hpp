#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbk3/lattice.hpp"

namespace hilbk3 {

// One row of the wall-parameter family
//   rho = -1,             1 <= alpha <= n-1
//   rho = 0,              3 <= alpha <= n-1
//   1 <= rho < (n-1)/4,   4*rho+1 <= alpha <= n-1
// with rhs = alpha^2 - 4*rho*(n-1). Pairs with rhs <= 0 stay in the list but
// are inert: they cannot span a ray inside the movable cone.
struct WallParams {
  long rho;
  long alpha;
  long rhs;
  bool active; // rhs > 0
};

std::vector<WallParams> wall_family(long n);

// A ray in the interior of the movable cone, spanned by X*h - 2tY*delta for
// a positive solution (X, Y) of X^2 - 4t(n-1)Y^2 = rhs with
// X = +-alpha (mod 2(n-1)).
struct Wall {
  DivisorClass ray; // primitive
  WallParams source;
  pell::Solution witness; // the (X, Y) above
};

struct ChamberDecomposition {
  DivisorClass extremal_low;  // h
  DivisorClass extremal_high; // primitive z*h - tw*delta
  std::vector<Wall> walls;    // strictly increasing slope
  long chamber_count = 1;
  // distinct (alpha, rho) sources that produced an already-seen ray
  std::vector<WallParams> duplicate_sources;
};

// Reason the closed movable cone is not <h, zh - tw*delta>, or empty when
// it is: t(n-1) must be non-square and, for n != 2, (n-1)X^2 - tY^2 = 1
// must have no integer solutions.
std::optional<std::string> cone_applicability(const HilbParams& p);

// Extremal rays (h, primitive z*h - tw*delta). Throws not_applicable.
std::pair<DivisorClass, DivisorClass> movable_cone(const HilbParams& p);

// Full wall-and-chamber decomposition of the movable cone: for each active
// parameter pair, every positive solution with the congruence and slope
// 0 < Y/X < w/(2z) spans a wall; rays are deduplicated and sorted by slope.
ChamberDecomposition decompose(const HilbParams& p);

enum class IrregularityPath {
  NoAutomorphism,    // no non-natural birational automorphism
  SymplecticOrDegreeOne, // t = 1 or the symplectic label: always irregular
  WallWitness,       // witness pair with 4*t*ell*Y^2 = rhs*a^2 found
  OddChambers,       // no witness; decomposition has odd chamber count
};

struct WallWitness {
  long ell;
  Int a;
  long alpha;
  long rho;
  Int x, y;
};

struct IrregularityCertificate {
  bool irregular = false;
  IrregularityPath path = IrregularityPath::NoAutomorphism;
  std::optional<WallWitness> witness;
  std::optional<long> chamber_count;
};

// Whether t is n-irregular: a non-natural birational automorphism exists
// and the decomposition has an even number of chambers. Every applicable
// decision path (shortcut, wall witness, chamber parity) is evaluated and
// cross-checked.
IrregularityCertificate is_n_irregular(const HilbParams& p);

enum class ScanMode {
  NonsymplecticFinite, // the finite list: Bir contains a non-symplectic
                       // involution and t is n-irregular
  FullRange,           // additionally the t = 1 / symplectic families, t <= t_max
};

struct IrregularValue {
  long t;
  long ell; // nu^2 = 2*ell
};

// t_max < 0 selects the default 10*(n-1)*(n+3) for FullRange; it is ignored
// in NonsymplecticFinite mode, where candidates t <= (n-1)(n+3) come from
// the divisor relation rhs = t*ell*r^2 and each is confirmed.
std::vector<IrregularValue> scan_irregular(long n, ScanMode mode, long t_max = -1);

// Class counts of X^2 - 8tY^2 = 9 and = 12, and their total, which equals
// the chamber count of the movable cone for n = 3. Hypotheses: t >= 2, 2t
// non-square, 2X^2 - tY^2 = 1 unsolvable, fundamental unit of 2t with even
// Y. Throws not_applicable otherwise.
struct N3ClassCounts {
  long count9;
  long count12;
  long chambers;
};
N3ClassCounts n3_class_counts(long t);

} // namespace hilbk3
