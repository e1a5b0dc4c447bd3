#include <doctest.h>

#include <random>

#include "hilbk3/lattice.hpp"

using namespace hilbk3;
using pell::Int;

TEST_CASE("form values on known classes") {
  CHECK(bbf_square(HilbParams(6, 2), {5, -3}) == 10);
  CHECK(bbf_square(HilbParams(8, 2), {2, -1}) == 2);
  CHECK(bbf_square(HilbParams(4, 7), {0, 0}) == 0);
  CHECK(bbf_square(HilbParams(3, 11), {1, 0}) == 22); // h^2 = 2t
  CHECK(bbf_square(HilbParams(3, 11), {0, 1}) == -4); // delta^2 = -2(n-1)
}

TEST_CASE("divisibility") {
  CHECK(divisibility(HilbParams(14, 5), {13, -8}) == 13);
  CHECK(divisibility(HilbParams(9, 1), {0, 1}) == 16); // delta -> 2(n-1)
  CHECK(divisibility(HilbParams(9, 1), {1, 0}) == 1);  // h -> 1
  CHECK_THROWS_AS(divisibility(HilbParams(2, 1), {0, 0}), error);
}

TEST_CASE("involution matrix entries and algebra") {
  ActionMatrix m25 = involution_matrix(HilbParams(2, 5));
  CHECK(m25.a == 9);
  CHECK(m25.b == -4);
  CHECK(m25.c == 20);
  CHECK(m25.d == -9);

  ActionMatrix m62 = involution_matrix(HilbParams(6, 2));
  CHECK(m62.a == 19);
  CHECK(m62.b == -30);
  CHECK(m62.c == 12);
  CHECK(m62.d == -19);

  // h maps to z*h - tw*delta and the upper extremal ray maps back to h
  DivisorClass h{1, 0};
  DivisorClass image = m62.apply(h);
  CHECK(image == DivisorClass{19, -12});
  CHECK(m62.apply(image) == h);
}

TEST_CASE("matrix is an involution preserving the form") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  for (long n = 2; n <= 14; ++n) {
    for (long t = 1; t <= 300; ++t) {
      if (pell::is_square(Int(t) * (n - 1))) continue;
      HilbParams p(n, t);
      ActionMatrix m = involution_matrix(p);
      CHECK(m.det() == -1);
      CHECK(m.trace() == 0);
      bool ok = true;
      for (int trial = 0; trial < 100; ++trial) {
        DivisorClass c{coeff(rng), coeff(rng)};
        ok = ok && m.apply(m.apply(c)) == c;
        ok = ok && bbf_square(p, m.apply(c)) == bbf_square(p, c);
      }
      CHECK_MESSAGE(ok, "n=", n, " t=", t);
    }
  }
}

TEST_CASE("reflection axis") {
  CHECK(reflection_fix_axis(HilbParams(6, 2)) == DivisorClass{5, -3});
  CHECK(reflection_fix_axis(HilbParams(8, 2)) == DivisorClass{2, -1});
  DivisorClass nu93 = reflection_fix_axis(HilbParams(9, 3));
  CHECK(nu93 == DivisorClass{5, -3});
  CHECK(bbf_square(HilbParams(9, 3), nu93) == 6); // 2t
  // axis is fixed, primitive, positive h-coefficient
  for (long n = 2; n <= 10; ++n) {
    for (long t = 1; t <= 40; ++t) {
      if (pell::is_square(Int(t) * (n - 1))) continue;
      HilbParams p(n, t);
      DivisorClass nu = reflection_fix_axis(p);
      CHECK(involution_matrix(p).apply(nu) == nu);
      Int g;
      mpz_gcd(g.get_mpz_t(), nu.x.get_mpz_t(), nu.y.get_mpz_t());
      CHECK(g == 1);
      CHECK(nu.x > 0);
    }
  }
}
