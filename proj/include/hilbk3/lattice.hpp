#pragma once

#include "hilbk3/pell.hpp"

namespace hilbk3 {

using pell::Int;

// Hilbert scheme of n points on a K3 surface polarized of degree 2t.
struct HilbParams {
  long n; // number of points, n >= 2
  long t; // half the polarization degree, t >= 1

  HilbParams(long n_, long t_) : n(n_), t(t_) {
    require(n >= 2, errc::parameter_violation, "n must be >= 2");
    require(t >= 1, errc::parameter_violation, "t must be >= 1");
  }
};

// Integer class x*h + y*delta in the rank-2 Neron-Severi lattice with
// h^2 = 2t, delta^2 = -2(n-1), h.delta = 0.
struct DivisorClass {
  Int x;
  Int y;
};

inline bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return a.x == b.x && a.y == b.y;
}

// 2t*x^2 - 2(n-1)*y^2.
Int bbf_square(const HilbParams& p, const DivisorClass& c);

// gcd(x, 2(n-1)|y|): the positive generator of the pairing ideal of the
// class with the full lattice. Throws zero_class on the zero class.
Int divisibility(const HilbParams& p, const DivisorClass& c);

// Class divided by the gcd of its coordinates, sign-normalized so the
// h-coefficient (or, failing that, the delta-coefficient) is positive.
DivisorClass primitive(const DivisorClass& c);

// The isometry [[z, -(n-1)w], [tw, -z]] in the basis {h, -delta}, where
// (z, w) = min_unit_with_congruence(n, t). It is an involution with
// determinant -1, swaps the movable-cone rays, and fixes the line through
// (n-1)w*h - (z-1)*delta.
struct ActionMatrix {
  // entries in the {h, -delta} basis
  Int a, b;
  Int c, d;

  // action on (x, y) coordinates in the {h, delta} basis
  DivisorClass apply(const DivisorClass& v) const;
  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }
};

ActionMatrix involution_matrix(const HilbParams& p);

// Primitive generator, with positive h-coefficient, of the line fixed by
// involution_matrix(p).
DivisorClass reflection_fix_axis(const HilbParams& p);

} // namespace hilbk3
