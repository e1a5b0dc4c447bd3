#include "hilbk3/lattice.hpp"

namespace hilbk3 {

Int bbf_square(const HilbParams& p, const DivisorClass& c) {
  return 2 * p.t * c.x * c.x - 2 * (p.n - 1) * c.y * c.y;
}

Int divisibility(const HilbParams& p, const DivisorClass& c) {
  require(!(c.x == 0 && c.y == 0), errc::zero_class, "divisibility of the zero class");
  Int g;
  Int other = 2 * (p.n - 1) * abs(c.y);
  mpz_gcd(g.get_mpz_t(), c.x.get_mpz_t(), other.get_mpz_t());
  return g;
}

DivisorClass primitive(const DivisorClass& c) {
  check_internal(!(c.x == 0 && c.y == 0), "primitive part of the zero class");
  Int g;
  mpz_gcd(g.get_mpz_t(), c.x.get_mpz_t(), c.y.get_mpz_t());
  DivisorClass out{c.x / g, c.y / g};
  if (out.x < 0 || (out.x == 0 && out.y < 0)) {
    out.x = -out.x;
    out.y = -out.y;
  }
  return out;
}

DivisorClass ActionMatrix::apply(const DivisorClass& v) const {
  // coordinates (x, y) in {h, delta} are (x, -y) in {h, -delta}
  Int u = v.x, w = -v.y;
  Int un = a * u + b * w;
  Int wn = c * u + d * w;
  return {un, -wn};
}

ActionMatrix involution_matrix(const HilbParams& p) {
  pell::Solution zw = pell::min_unit_with_congruence(p.n, p.t);
  ActionMatrix m{zw.x, -(p.n - 1) * zw.y, p.t * zw.y, -zw.x};
  check_internal(m.det() == -1 && m.trace() == 0, "involution matrix is not a reflection");
  return m;
}

DivisorClass reflection_fix_axis(const HilbParams& p) {
  pell::Solution zw = pell::min_unit_with_congruence(p.n, p.t);
  // fixed line through (n-1)w*h - (z-1)*delta
  DivisorClass nu = primitive({(p.n - 1) * zw.y, -(zw.x - 1)});
  check_internal(involution_matrix(p).apply(nu) == nu, "fix axis is not fixed");
  return nu;
}

} // namespace hilbk3
