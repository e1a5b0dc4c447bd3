// Command-line surface: exact Pell solving, birational-group classification
// of Hilbert schemes of points on degree-2t K3 surfaces of Picard rank one,
// movable-cone chamber decompositions, irregular-degree scans, and the
// derived tables.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "hilbk3/ambiguity.hpp"
#include "hilbk3/classify.hpp"
#include "hilbk3/cones.hpp"
#include "hilbk3/parallel.hpp"
#include "hilbk3/report.hpp"
#include "hilbk3/tables.hpp"

namespace {

using namespace hilbk3;

struct Range {
  long lo = 0, hi = -1;
  bool set = false;
};

Range parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    raise(errc::parameter_violation, "range must be of the form A:B");
  Range r;
  r.lo = std::stol(s.substr(0, colon));
  r.hi = std::stol(s.substr(colon + 1));
  r.set = true;
  require(r.lo <= r.hi, errc::parameter_violation, "empty range " + s);
  return r;
}

struct Output {
  std::string path;
  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    require(out.good(), errc::parameter_violation, "cannot open output file " + path);
    out << text;
  }
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"birational automorphisms of Hilbert schemes of points on K3 surfaces"};
  app.require_subcommand(1);
  app.fallthrough(); // global options may follow the subcommand

  std::string format = "json";
  std::string out_path;
  unsigned jobs = std::thread::hardware_concurrency();
  bool verify = false;
  app.add_option("--format", format, "output format: json|csv|md")->capture_default_str();
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--jobs", jobs, "worker threads for scans")->capture_default_str();
  app.add_flag("--verify", verify, "enable brute-force oracles and dual-path assertions");

  long n = 0, t = 0;
  std::string n_range_s, t_range_s;

  auto* cmd_pell = app.add_subcommand("pell", "solve X^2 - rY^2 = m");
  std::string r_str = "0";
  long m_val = 1;
  cmd_pell->add_option("--r", r_str, "radicand (positive integer)")->required();
  cmd_pell->add_option("--m", m_val, "right-hand side")->capture_default_str();

  auto* cmd_classify = app.add_subcommand("classify", "birational automorphism group of S^[n]");
  cmd_classify->add_option("--n", n, "number of points");
  cmd_classify->add_option("--t", t, "half the polarization degree");
  cmd_classify->add_option("--n-range", n_range_s, "inclusive range A:B of n");
  cmd_classify->add_option("--t-range", t_range_s, "inclusive range A:B of t");

  auto* cmd_chambers = app.add_subcommand("chambers", "movable-cone wall-and-chamber decomposition");
  cmd_chambers->add_option("--n", n, "number of points")->required();
  cmd_chambers->add_option("--t", t, "half the polarization degree")->required();

  auto* cmd_scan = app.add_subcommand("scan-irregular", "n-irregular degree values");
  long t_max = -1;
  bool full = false;
  cmd_scan->add_option("--n", n, "number of points");
  cmd_scan->add_option("--n-range", n_range_s, "inclusive range A:B of n");
  cmd_scan->add_option("--t-max", t_max, "upper bound for the full-range scan");
  cmd_scan->add_flag("--full", full, "include the degree-one and symplectic families");

  auto* cmd_ambiguity = app.add_subcommand("ambiguity", "non-induced birational maps to partner Hilbert schemes");
  cmd_ambiguity->add_option("--n", n, "number of points")->required();
  cmd_ambiguity->add_option("--t", t, "half the polarization degree")->required();

  auto* cmd_table = app.add_subcommand("table", "reproduce a derived table");
  std::string which;
  long table_t_max = -1;
  cmd_table->add_option("which", which, "table1|table2|prop54")->required();
  cmd_table->add_option("--t-max", table_t_max, "degree bound (table2: 30, prop54: 500)");

  auto* cmd_conjecture = app.add_subcommand("conjecture", "biregularity of the degree family (n-1)k^2+1, k >= 3");
  long n_max = 14, k_max = 10;
  cmd_conjecture->add_option("--n-max", n_max, "largest n")->capture_default_str();
  cmd_conjecture->add_option("--k-max", k_max, "largest k")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  Format fmt = parse_format(format);
  Output output{out_path};

  if (cmd_pell->parsed()) {
    pell::Int r(r_str);
    require(r >= 1, errc::parameter_violation, "r must be positive");
    require(m_val != 0, errc::parameter_violation, "m must be nonzero");
    pell::UnitInfo unit = pell::unit_info(r);
    auto classes = pell::fundamental_solutions({r, m_val});
    json j;
    j["r"] = to_json(r);
    j["m"] = m_val;
    j["unit"] = json::array({to_json(unit.plus.x), to_json(unit.plus.y)});
    j["negative_unit"] =
        unit.minus ? json::array({to_json(unit.minus->x), to_json(unit.minus->y)})
                   : json(nullptr);
    json cl = json::array();
    for (const auto& c : classes)
      cl.push_back(json{{"x", to_json(c.fundamental.x)},
                        {"y", to_json(c.fundamental.y)},
                        {"conjugate_pair", c.conjugate_pair}});
    j["classes"] = cl;
    if (fmt == Format::Csv) {
      std::string s = "x,y,conjugate_pair\n";
      for (const auto& c : classes)
        s += c.fundamental.x.get_str() + "," + c.fundamental.y.get_str() + "," +
             (c.conjugate_pair ? "true" : "false") + "\n";
      output.emit(s);
    } else {
      output.emit(dump(j));
    }
    return 0;
  }

  if (cmd_classify->parsed()) {
    Range nr = n_range_s.empty() ? Range{n, n, n != 0} : parse_range(n_range_s);
    Range tr = t_range_s.empty() ? Range{t, t, t != 0} : parse_range(t_range_s);
    require(nr.set && tr.set, errc::parameter_violation,
            "classify needs --n/--t or --n-range/--t-range");
    std::vector<std::pair<long, long>> cells;
    for (long nn = nr.lo; nn <= nr.hi; ++nn)
      for (long tt = tr.lo; tt <= tr.hi; ++tt) cells.emplace_back(nn, tt);
    auto reports = parallel_map_ordered<BirClassification>(
        cells.size(), jobs, [&](std::size_t i) {
          auto [nn, tt] = cells[i];
          BirClassification c = classify(HilbParams(nn, tt));
          if (verify) {
            // the irregularity certificate re-runs the wall-witness and
            // parity paths and cross-checks them
            IrregularityCertificate cert = is_n_irregular(HilbParams(nn, tt));
            check_internal(cert.irregular == c.irregular,
                           "verify: certificate disagrees with classification");
          }
          return c;
        });
    if (fmt == Format::Csv) {
      std::string s;
      for (std::size_t i = 0; i < reports.size(); ++i)
        s += classification_csv(reports[i], i == 0);
      output.emit(s);
    } else if (fmt == Format::Md) {
      std::string s;
      for (const auto& c : reports) s += classification_md(c) + "\n";
      output.emit(s);
    } else if (reports.size() == 1) {
      output.emit(dump(classification_json(reports[0])));
    } else {
      json arr = json::array();
      for (const auto& c : reports) arr.push_back(classification_json(c));
      output.emit(dump(arr));
    }
    return 0;
  }

  if (cmd_chambers->parsed()) {
    HilbParams p(n, t);
    if (auto reason = cone_applicability(p)) {
      json j;
      j["n"] = n;
      j["t"] = t;
      j["applicable"] = false;
      j["reason"] = *reason;
      output.emit(dump(j));
      return 0;
    }
    ChamberDecomposition dec = decompose(p);
    if (fmt == Format::Csv)
      output.emit(decomposition_csv(n, t, dec));
    else
      output.emit(dump(decomposition_json(n, t, dec)));
    return 0;
  }

  if (cmd_scan->parsed()) {
    Range nr = n_range_s.empty() ? Range{n, n, n != 0} : parse_range(n_range_s);
    require(nr.set, errc::parameter_violation, "scan-irregular needs --n or --n-range");
    std::vector<long> ns;
    for (long nn = nr.lo; nn <= nr.hi; ++nn) ns.push_back(nn);
    ScanMode mode = full ? ScanMode::FullRange : ScanMode::NonsymplecticFinite;
    auto lists = parallel_map_ordered<std::vector<IrregularValue>>(
        ns.size(), jobs, [&](std::size_t i) { return scan_irregular(ns[i], mode, t_max); });
    if (fmt == Format::Csv) {
      std::string s;
      for (std::size_t i = 0; i < ns.size(); ++i) s += irregular_csv(ns[i], lists[i], i == 0);
      output.emit(s);
    } else {
      json arr = json::array();
      for (std::size_t i = 0; i < ns.size(); ++i) arr.push_back(irregular_json(ns[i], lists[i]));
      output.emit(dump(arr.size() == 1 ? arr[0] : arr));
    }
    return 0;
  }

  if (cmd_ambiguity->parsed()) {
    AmbiguityReport rep = ambiguity(HilbParams(n, t), verify);
    if (fmt == Format::Csv)
      output.emit(ambiguity_csv(rep, true));
    else
      output.emit(dump(ambiguity_json(rep)));
    return 0;
  }

  if (cmd_table->parsed()) {
    if (which == "table1") {
      auto rows = irregular_table();
      if (fmt == Format::Md)
        output.emit(irregular_table_md(rows));
      else if (fmt == Format::Csv)
        output.emit(irregular_table_csv(rows));
      else
        output.emit(dump(irregular_table_json(rows)));
    } else if (which == "table2") {
      auto rows = n3_table(table_t_max < 0 ? 30 : table_t_max);
      if (fmt == Format::Md)
        output.emit(n3_table_md(rows));
      else if (fmt == Format::Csv)
        output.emit(n3_table_csv(rows));
      else
        output.emit(dump(n3_table_json(rows)));
    } else if (which == "prop54") {
      auto buckets = class_count_buckets(table_t_max < 0 ? 500 : table_t_max);
      if (!buckets.violations.empty()) {
        std::cerr << "class counts violate the residue table at t = "
                  << buckets.violations.front().t << "\n";
        return 3;
      }
      if (fmt == Format::Md)
        output.emit(class_count_buckets_md(buckets));
      else if (fmt == Format::Csv)
        output.emit(class_count_buckets_csv(buckets));
      else
        output.emit(dump(class_count_buckets_json(buckets)));
    } else {
      raise(errc::parameter_violation, "unknown table '" + which + "'");
    }
    return 0;
  }

  if (cmd_conjecture->parsed()) {
    ConjectureReport rep = conjecture_check(n_max, k_max);
    if (fmt == Format::Md) {
      std::string s = "conjecture check n <= " + std::to_string(n_max) +
                      ", k = 3.." + std::to_string(k_max) + ": " +
                      (rep.counterexamples.empty() ? "no counterexamples"
                                                   : "counterexamples found") +
                      "\n";
      output.emit(s);
    } else {
      output.emit(dump(conjecture_json(rep)));
    }
    return rep.counterexamples.empty() ? 0 : 3;
  }

  return 2;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hilbk3::error& e) {
    switch (e.kind()) {
      case hilbk3::errc::internal:
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
      default:
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
