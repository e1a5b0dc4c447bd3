#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbk3/cones.hpp"
#include "hilbk3/lattice.hpp"

namespace hilbk3 {

enum class Group { Trivial, Z2, Z2xZ2 };

std::string to_string(Group g);

// Residue pair (z mod 2(n-1), z mod 2t) reduced to +-1 labels.
struct CaseJK {
  int j;
  int k;
};

inline bool operator==(const CaseJK& a, const CaseJK& b) { return a.j == b.j && a.k == b.k; }

// For t >= 2: the congruence label of the minimal unit (z, w) of
// X^2 - t(n-1)Y^2 = 1 with z = +-1 (mod n-1), or empty when t(n-1) is
// square, w is odd, a residue is not +-1, or the label is (-1, 1) (which
// forces (n-1)X^2 - tY^2 = 1 solvable and kills the movable-cone shape).
std::optional<CaseJK> congruence_case(const HilbParams& p);

// Existence data for a non-natural birational automorphism, computable
// without the chamber decomposition.
struct NonNaturalInfo {
  bool exists = false;
  std::optional<CaseJK> case_jk; // t >= 2 only
  bool t1_two_generators = false; // t = 1 with both a symplectic and a
                                  // non-symplectic non-natural involution
  bool symplectic = false;        // label (1,1); for t = 1 one of each exists
  Int a, b;                       // minimal solution behind nu
  long ell = 0;                   // nu^2 = 2*ell (1, n-1, or t)
  DivisorClass nu;                // primitive fixed axis (the non-symplectic
                                  // generator's when t = 1)
};

NonNaturalInfo nonnatural_info(const HilbParams& p);

enum class InvariantLattice { None, Two, TwoN2, CoinvTwoN2 };

std::string to_string(InvariantLattice d, long n);

struct BirClassification {
  long n = 0, t = 0;
  Group group = Group::Trivial;
  Group aut_group = Group::Trivial;
  std::optional<CaseJK> case_jk;
  // symplectic type per non-natural generator; {true, false} for the t = 1
  // group Z/2 x Z/2, a single entry otherwise
  std::vector<bool> symplectic;
  std::optional<int> transcendental_action; // +1 or -1
  std::optional<DivisorClass> nu;
  InvariantLattice invariant = InvariantLattice::None;
  std::optional<ChamberDecomposition> decomposition; // absent when the cone
                                                     // shape is n/a
  std::optional<long> chamber_count;
  bool irregular = false;        // non-natural exists and chambers are even
  bool biregular = false;        // the non-natural generator, when present
  bool regularizable = false;    // becomes biregular on some model
  bool not_hilbert_model = false;
  bool natural_only = false;     // t = 1 with Bir = Aut
};

BirClassification classify(const HilbParams& p);

enum class FamilyKind { Inv2, Inv2N2, Sympl };

// Degree families realizing each congruence label:
//   Inv2   (k >= 1):                  t = (n-1)k^2 + 1              -> (1,-1)
//   Inv2N2 (k, q >= 1, q^2 = -1 mod n-1):
//                                     t = (n-1)k^2 + 2qk + (q^2+1)/(n-1)
//                                                                   -> (-1,-1)
//   Sympl  (q >= 3, h(n-1) = q^2-1, h != 0 mod q-1 and mod q+1):
//                                     t = (n-1)k^2 + 2qk + h        -> (1,1)
struct FamilyValue {
  long t;
  CaseJK predicted;
};
FamilyValue family_t(FamilyKind kind, long n, long k, long q = 0, long h = 0);

struct ConjectureReport {
  long n_max = 0, k_max = 0;
  long cells = 0;
  struct Counterexample {
    long n, k, t;
  };
  std::vector<Counterexample> counterexamples;
};

// For every 2 <= n <= n_max, 3 <= k <= k_max, t = (n-1)k^2 + 1: records the
// cells whose non-natural non-symplectic involution fails to be biregular.
ConjectureReport conjecture_check(long n_max, long k_max);

enum class Polarization { Square2Div1, Square2Div2, Square2N2DivN1 };

// Connected-component counts of the rank-one-invariant involution moduli
// spaces; empty when the space is.
std::optional<Int> moduli_components(long n, Polarization pol);

// Whether the component of the (square 2(n-1), divisibility n-1) moduli
// space attached to t1 equals the one attached to t2: the minimal solutions
// (a_i, b_i) of X^2 - t_i(n-1)Y^2 = -1 must have a1 = +-a2 (mod n-1).
// Requires both t_i to carry a biregular non-natural automorphism with that
// equation solvable.
bool same_component(long n, long t1, long t2);

} // namespace hilbk3
