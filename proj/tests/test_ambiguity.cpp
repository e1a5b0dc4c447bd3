#include <doctest.h>

#include "hilbk3/ambiguity.hpp"
#include "hilbk3/classify.hpp"
#include "oracles.hpp"

using namespace hilbk3;
using pell::Int;

TEST_CASE("partner counts") {
  CHECK(fm_partner_count(1) == 1);
  CHECK(fm_partner_count(6) == 2);
  CHECK(fm_partner_count(30) == 4);
  for (long t = 1; t <= 120; ++t)
    CHECK_MESSAGE(fm_partner_count(t) == oracle::fm_count_by_search(t), "t=", t);
}

TEST_CASE("non-induced maps on the worked instances") {
  AmbiguityReport r26 = ambiguity(HilbParams(2, 6), true);
  CHECK(r26.exists_noninduced_map);
  REQUIRE(r26.partner_isomorphic_to_s.has_value());
  CHECK_FALSE(*r26.partner_isomorphic_to_s);
  REQUIRE(r26.partner_label.has_value());
  CHECK(r26.partner_label->p == 1);
  CHECK(r26.partner_label->q == 1);
  CHECK(r26.partner_label->r == 3);
  CHECK(r26.partner_label->s == 2);

  AmbiguityReport r25 = ambiguity(HilbParams(2, 5), true);
  CHECK(r25.exists_noninduced_map);
  CHECK(*r25.partner_isomorphic_to_s);
  REQUIRE(r25.map_biregular.has_value());
  CHECK_FALSE(*r25.map_biregular);

  AmbiguityReport r23 = ambiguity(HilbParams(2, 3));
  CHECK_FALSE(r23.exists_noninduced_map); // unit (2,1) has odd w
}

TEST_CASE("isomorphic partner matches a nontrivial group") {
  for (long n = 2; n <= 10; ++n) {
    for (long t = 1; t <= 300; ++t) {
      AmbiguityReport rep = ambiguity(HilbParams(n, t));
      bool self_map = rep.exists_noninduced_map && *rep.partner_isomorphic_to_s;
      bool nonnatural = nonnatural_info(HilbParams(n, t)).exists;
      CHECK_MESSAGE(self_map == nonnatural, "n=", n, " t=", t);
    }
  }
}

TEST_CASE("label identity across a scan") {
  for (long n = 2; n <= 8; ++n) {
    for (long t = 2; t <= 150; ++t) {
      AmbiguityReport rep = ambiguity(HilbParams(n, t));
      if (!rep.partner_label) continue;
      const PartnerLabel& l = *rep.partner_label;
      CHECK(l.r * l.s == t);
      Int lhs = (n - 1) * l.s * l.p * l.p - l.r * l.q * l.q;
      CHECK((lhs == 1 || lhs == -1));
    }
  }
}

TEST_CASE("slope route agrees with the chamber count") {
  for (long n = 2; n <= 6; ++n)
    for (long t = 2; t <= 60; ++t) ambiguity(HilbParams(n, t), true);
}
