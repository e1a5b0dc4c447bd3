#include "hilbk3/tables.hpp"

#include <algorithm>
#include <sstream>

namespace hilbk3 {

std::vector<IrregularTableRow> irregular_table() {
  std::vector<IrregularTableRow> rows;
  for (long n = 2; n <= 14; ++n) {
    IrregularTableRow row{n, {}, {}};
    for (const IrregularValue& v : scan_irregular(n, ScanMode::NonsymplecticFinite)) {
      if (v.ell == 1)
        row.nu_square_2.push_back(v.t);
      else
        row.nu_square_2n2.push_back(v.t);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<N3TableRow> n3_table(long t_max) {
  std::vector<N3TableRow> rows;
  for (long t = 1; t <= t_max; ++t) {
    BirClassification c = classify(HilbParams(3, t));
    if (c.group == Group::Trivial) continue;
    long d;
    if (t == 1) {
      // Bir = Aut here; the nef and movable cones agree and the cone-shape
      // machinery does not apply
      d = 1;
    } else {
      check_internal(c.chamber_count.has_value(), "nontrivial Bir without a chamber count");
      d = *c.chamber_count;
      N3ClassCounts counts = n3_class_counts(t);
      check_internal(counts.chambers == d, "class counts disagree with the decomposition");
    }
    rows.push_back({t, d, c.aut_group, c.group});
  }
  return rows;
}

namespace {

const std::vector<long> kEmpty{};
// residues 0..17 of t mod 18
const std::vector<long> kCount9[18] = {
    {1, 2, 3}, {1}, {1, 3}, {1}, {1}, {1, 3}, {1}, {1}, {1, 3},
    {1, 2, 3}, {1}, {1, 3}, {1}, {1}, {1, 3}, {1}, {1}, {1, 3}};
const std::vector<long> kCount12[18] = {
    {0}, {0}, {0}, {0, 1}, {0}, {0, 2}, {0}, {0}, {0},
    {0}, {0}, {0, 2}, {0}, {0}, {0}, {0}, {0}, {0, 2}};
const std::vector<long> kChambers[18] = {
    {1, 2, 3}, {1}, {1, 3}, {1, 2}, {1}, {1, 3, 5}, {1}, {1}, {1, 3},
    {1, 2, 3}, {1}, {1, 3, 5}, {1}, {1}, {1, 3}, {1}, {1}, {1, 3, 5}};

bool contains(const std::vector<long>& v, long x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::string join(const std::vector<long>& v) {
  if (v.empty()) return "/";
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s;
}

} // namespace

const std::vector<long>& allowed_count9(long residue) { return kCount9[residue % 18]; }
const std::vector<long>& allowed_count12(long residue) { return kCount12[residue % 18]; }
const std::vector<long>& allowed_chambers(long residue) { return kChambers[residue % 18]; }

ClassCountBuckets class_count_buckets(long t_max) {
  ClassCountBuckets b;
  b.t_max = t_max;
  for (long t = 2; t <= t_max; ++t) {
    N3ClassCounts counts;
    try {
      counts = n3_class_counts(t);
    } catch (const error& e) {
      if (e.kind() == errc::not_applicable) continue;
      throw;
    }
    long res = t % 18;
    std::array<long, 3> triple{counts.count9, counts.count12, counts.chambers};
    auto& list = b.observed[res];
    if (std::find(list.begin(), list.end(), triple) == list.end()) list.push_back(triple);
    if (!contains(kCount9[res], counts.count9) || !contains(kCount12[res], counts.count12) ||
        !contains(kChambers[res], counts.chambers))
      b.violations.push_back({t, counts});
  }
  for (auto& list : b.observed) std::sort(list.begin(), list.end());
  return b;
}

json irregular_table_json(const std::vector<IrregularTableRow>& rows) {
  json j = json::array();
  for (const auto& row : rows) {
    json r;
    r["n"] = row.n;
    r["nu_square_2"] = row.nu_square_2;
    r["nu_square_2n2"] = row.nu_square_2n2;
    j.push_back(r);
  }
  return j;
}

std::string irregular_table_md(const std::vector<IrregularTableRow>& rows) {
  std::ostringstream out;
  out << "| n | irregular t, nu^2 = 2 | irregular t, nu^2 = 2(n-1) |\n";
  out << "|---|---|---|\n";
  for (const auto& row : rows) {
    if (row.n == 2) {
      // the two columns coincide for n = 2
      out << "| 2 | " << join(row.nu_square_2) << " | " << join(row.nu_square_2) << " |\n";
      continue;
    }
    out << "| " << row.n << " | " << join(row.nu_square_2) << " | " << join(row.nu_square_2n2)
        << " |\n";
  }
  return out.str();
}

std::string irregular_table_csv(const std::vector<IrregularTableRow>& rows) {
  std::ostringstream out;
  out << "n,nu_square_2,nu_square_2n2\n";
  for (const auto& row : rows) {
    auto cell = [](const std::vector<long>& v) {
      std::string s;
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
      }
      return s;
    };
    out << row.n << ',' << cell(row.nu_square_2) << ',' << cell(row.nu_square_2n2) << '\n';
  }
  return out.str();
}

json n3_table_json(const std::vector<N3TableRow>& rows) {
  json j = json::array();
  for (const auto& row : rows) {
    json r;
    r["t"] = row.t;
    r["d"] = row.d;
    r["aut"] = to_string(row.aut);
    r["bir"] = to_string(row.bir);
    j.push_back(r);
  }
  return j;
}

std::string n3_table_md(const std::vector<N3TableRow>& rows) {
  std::ostringstream out;
  out << "| t | d | Aut | Bir |\n|---|---|---|---|\n";
  for (const auto& row : rows)
    out << "| " << row.t << " | " << row.d << " | "
        << (row.aut == Group::Trivial ? "{id}" : to_string(row.aut)) << " | "
        << to_string(row.bir) << " |\n";
  return out.str();
}

std::string n3_table_csv(const std::vector<N3TableRow>& rows) {
  std::ostringstream out;
  out << "t,d,aut,bir\n";
  for (const auto& row : rows)
    out << row.t << ',' << row.d << ',' << to_string(row.aut) << ',' << to_string(row.bir)
        << '\n';
  return out.str();
}

json class_count_buckets_json(const ClassCountBuckets& b) {
  json j;
  j["t_max"] = b.t_max;
  json buckets = json::array();
  for (long res = 0; res < 18; ++res) {
    json r;
    r["t_mod_18"] = res;
    json triples = json::array();
    for (const auto& t : b.observed[res]) triples.push_back(json::array({t[0], t[1], t[2]}));
    r["observed"] = triples;
    r["allowed_count9"] = kCount9[res];
    r["allowed_count12"] = kCount12[res];
    r["allowed_chambers"] = kChambers[res];
    buckets.push_back(r);
  }
  j["buckets"] = buckets;
  json v = json::array();
  for (const auto& viol : b.violations)
    v.push_back(json{{"t", viol.t},
                     {"count9", viol.counts.count9},
                     {"count12", viol.counts.count12},
                     {"chambers", viol.counts.chambers}});
  j["violations"] = v;
  return j;
}

std::string class_count_buckets_md(const ClassCountBuckets& b) {
  std::ostringstream out;
  out << "| t mod 18 | observed (c9, c12, d) | allowed c9 | allowed c12 | allowed d |\n";
  out << "|---|---|---|---|---|\n";
  for (long res = 0; res < 18; ++res) {
    std::string obs;
    for (const auto& t : b.observed[res]) {
      if (!obs.empty()) obs += "; ";
      obs += "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
             std::to_string(t[2]) + ")";
    }
    if (obs.empty()) obs = "/";
    out << "| " << res << " | " << obs << " | " << join(kCount9[res]) << " | "
        << join(kCount12[res]) << " | " << join(kChambers[res]) << " |\n";
  }
  out << "\nviolations: " << b.violations.size() << "\n";
  return out.str();
}

std::string class_count_buckets_csv(const ClassCountBuckets& b) {
  std::ostringstream out;
  out << "t_mod_18,count9,count12,chambers\n";
  for (long res = 0; res < 18; ++res)
    for (const auto& t : b.observed[res])
      out << res << ',' << t[0] << ',' << t[1] << ',' << t[2] << '\n';
  return out.str();
}

} // namespace hilbk3
