#pragma once

#include <optional>

#include "hilbk3/lattice.hpp"

namespace hilbk3 {

// Number of non-isomorphic Fourier-Mukai partners of a K3 surface of degree
// 2t and Picard rank one: 2^(omega(t)-1), with omega(1) taken to be 1.
Int fm_partner_count(long t);

// Moduli-space description of the partner: Sigma = M_S(s, H, r) with
// (n-1)sp^2 - rq^2 = +-1 and t = rs, extracted from the minimal unit
// z = 2(n-1)k + eps, w = 2h' through k = sp^2, k(n-1) + eps = rq^2, h' = pq.
struct PartnerLabel {
  Int p, q, r, s;
};

struct AmbiguityReport {
  long n = 0, t = 0;
  bool exists_noninduced_map = false;
  std::optional<bool> partner_isomorphic_to_s;
  Int fm_partners;
  std::optional<PartnerLabel> partner_label;
  std::optional<bool> map_biregular;
};

// Existence and shape of a birational map S^[n] --> Sigma^[n] not induced
// by an isomorphism of the surfaces. With verify set, the biregularity of
// the map is recomputed per parameter pair from the minimal-solution slope
// condition and checked against the chamber count.
AmbiguityReport ambiguity(const HilbParams& p, bool verify = false);

} // namespace hilbk3
