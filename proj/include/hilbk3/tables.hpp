#pragma once

#include <array>
#include <string>
#include <vector>

#include "hilbk3/classify.hpp"
#include "hilbk3/cones.hpp"
#include "hilbk3/report.hpp"

namespace hilbk3 {

// n-irregular values for 2 <= n <= 14 carrying a non-symplectic involution,
// split by the square of the middle-wall generator (2 versus 2(n-1)).
struct IrregularTableRow {
  long n;
  std::vector<long> nu_square_2;    // ell = 1
  std::vector<long> nu_square_2n2;  // ell = n-1
};
std::vector<IrregularTableRow> irregular_table();

// Chamber count and group structure for n = 3, 1 <= t <= t_max, listing
// only the degrees with nontrivial birational automorphisms.
struct N3TableRow {
  long t;
  long d;
  Group aut;
  Group bir;
};
std::vector<N3TableRow> n3_table(long t_max = 30);

// Class counts of X^2 - 8tY^2 = 9 and 12 bucketed by t mod 18, checked
// against the possible values for each residue.
struct ClassCountBuckets {
  long t_max;
  // observed[residue] = sorted distinct (count9, count12, chambers) triples
  std::array<std::vector<std::array<long, 3>>, 18> observed;
  struct Violation {
    long t;
    N3ClassCounts counts;
  };
  std::vector<Violation> violations;
};
ClassCountBuckets class_count_buckets(long t_max);

// Allowed class counts per residue of t mod 18.
const std::vector<long>& allowed_count9(long residue);
const std::vector<long>& allowed_count12(long residue);
const std::vector<long>& allowed_chambers(long residue);

json irregular_table_json(const std::vector<IrregularTableRow>& rows);
std::string irregular_table_md(const std::vector<IrregularTableRow>& rows);
std::string irregular_table_csv(const std::vector<IrregularTableRow>& rows);

json n3_table_json(const std::vector<N3TableRow>& rows);
std::string n3_table_md(const std::vector<N3TableRow>& rows);
std::string n3_table_csv(const std::vector<N3TableRow>& rows);

json class_count_buckets_json(const ClassCountBuckets& b);
std::string class_count_buckets_md(const ClassCountBuckets& b);
std::string class_count_buckets_csv(const ClassCountBuckets& b);

} // namespace hilbk3
