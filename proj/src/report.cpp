#include "hilbk3/report.hpp"

#include <sstream>

namespace hilbk3 {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "md") return Format::Md;
  raise(errc::parameter_violation, "unknown format '" + s + "' (expected json|csv|md)");
}

json to_json(const Int& v) {
  if (v.fits_slong_p() && sizeof(long) == 8) return json(v.get_si());
  return json(v.get_str());
}

json to_json(const DivisorClass& c) { return json::array({to_json(c.x), to_json(c.y)}); }

namespace {

json case_json(const std::optional<CaseJK>& c) {
  if (!c) return nullptr;
  return json::array({c->j, c->k});
}

json symplectic_json(const std::vector<bool>& v) {
  if (v.empty()) return nullptr;
  if (v.size() == 1) return json(v[0]);
  json a = json::array();
  for (bool b : v) a.push_back(b);
  return a;
}

std::string case_str(const std::optional<CaseJK>& c) {
  if (!c) return "";
  return "(" + std::to_string(c->j) + "," + std::to_string(c->k) + ")";
}

std::string sympl_str(const std::vector<bool>& v) {
  if (v.empty()) return "";
  if (v.size() == 1) return v[0] ? "true" : "false";
  std::string s;
  for (bool b : v) s += (b ? "true" : "false") + std::string(";");
  s.pop_back();
  return s;
}

} // namespace

namespace {

json walls_json(const ChamberDecomposition& d) {
  json walls = json::array();
  for (const Wall& w : d.walls) {
    json wj;
    wj["alpha"] = w.source.alpha;
    wj["rho"] = w.source.rho;
    wj["X"] = to_json(w.witness.x);
    wj["Y"] = to_json(w.witness.y);
    wj["ray"] = to_json(w.ray);
    walls.push_back(wj);
  }
  return walls;
}

} // namespace

json classification_json(const BirClassification& c) {
  json j;
  j["n"] = c.n;
  j["t"] = c.t;
  j["group"] = to_string(c.group);
  j["aut"] = to_string(c.aut_group);
  j["case_jk"] = case_json(c.case_jk);
  j["symplectic"] = symplectic_json(c.symplectic);
  j["nu"] = c.nu ? to_json(*c.nu) : json(nullptr);
  j["invariant"] = c.invariant == InvariantLattice::None ? json(nullptr)
                                                         : json(to_string(c.invariant, c.n));
  j["chambers"] = c.chamber_count ? json(*c.chamber_count) : json(nullptr);
  j["walls"] = c.decomposition ? walls_json(*c.decomposition) : json(nullptr);
  j["irregular"] = c.irregular;
  j["biregular"] = c.biregular;
  j["regularizable"] = c.regularizable;
  j["not_hilbert_model"] = c.not_hilbert_model;
  return j;
}

json decomposition_json(long n, long t, const ChamberDecomposition& d) {
  json j;
  j["n"] = n;
  j["t"] = t;
  j["movable"] = json::array({to_json(d.extremal_low), to_json(d.extremal_high)});
  j["walls"] = walls_json(d);
  j["chambers"] = d.chamber_count;
  return j;
}

json ambiguity_json(const AmbiguityReport& r) {
  json j;
  j["n"] = r.n;
  j["t"] = r.t;
  j["exists_noninduced_map"] = r.exists_noninduced_map;
  j["partner_isomorphic_to_s"] =
      r.partner_isomorphic_to_s ? json(*r.partner_isomorphic_to_s) : json(nullptr);
  j["fm_partners"] = to_json(r.fm_partners);
  if (r.partner_label) {
    json l;
    l["p"] = to_json(r.partner_label->p);
    l["q"] = to_json(r.partner_label->q);
    l["r"] = to_json(r.partner_label->r);
    l["s"] = to_json(r.partner_label->s);
    j["partner_label"] = l;
    j["partner_moduli"] = "M_S(" + r.partner_label->s.get_str() + ", H, " +
                          r.partner_label->r.get_str() + ")";
  } else {
    j["partner_label"] = nullptr;
    j["partner_moduli"] = nullptr;
  }
  j["map_biregular"] = r.map_biregular ? json(*r.map_biregular) : json(nullptr);
  return j;
}

json irregular_json(long n, const std::vector<IrregularValue>& values) {
  json j;
  j["n"] = n;
  json vals = json::array();
  for (const IrregularValue& v : values) {
    json e;
    e["t"] = v.t;
    e["ell"] = v.ell;
    vals.push_back(e);
  }
  j["irregular"] = vals;
  return j;
}

json conjecture_json(const ConjectureReport& r) {
  json j;
  j["n_max"] = r.n_max;
  j["k_max"] = r.k_max;
  j["cells"] = r.cells;
  json cx = json::array();
  for (const auto& c : r.counterexamples)
    cx.push_back(json{{"n", c.n}, {"k", c.k}, {"t", c.t}});
  j["counterexamples"] = cx;
  return j;
}

std::string classification_csv(const BirClassification& c, bool header) {
  std::ostringstream out;
  if (header)
    out << "n,t,group,aut,case,symplectic,nu_x,nu_y,invariant,chambers,irregular,"
           "biregular,regularizable,not_hilbert_model\n";
  out << c.n << ',' << c.t << ',' << to_string(c.group) << ',' << to_string(c.aut_group) << ','
      << case_str(c.case_jk) << ',' << sympl_str(c.symplectic) << ','
      << (c.nu ? c.nu->x.get_str() : "") << ',' << (c.nu ? c.nu->y.get_str() : "") << ','
      << (c.invariant == InvariantLattice::None ? "" : to_string(c.invariant, c.n)) << ','
      << (c.chamber_count ? std::to_string(*c.chamber_count) : "") << ','
      << (c.irregular ? "true" : "false") << ',' << (c.biregular ? "true" : "false") << ','
      << (c.regularizable ? "true" : "false") << ','
      << (c.not_hilbert_model ? "true" : "false") << '\n';
  return out.str();
}

std::string decomposition_csv(long n, long t, const ChamberDecomposition& d) {
  std::ostringstream out;
  out << "n,t,alpha,rho,X,Y,ray_x,ray_y\n";
  for (const Wall& w : d.walls)
    out << n << ',' << t << ',' << w.source.alpha << ',' << w.source.rho << ','
        << w.witness.x.get_str() << ',' << w.witness.y.get_str() << ',' << w.ray.x.get_str()
        << ',' << w.ray.y.get_str() << '\n';
  return out.str();
}

std::string ambiguity_csv(const AmbiguityReport& r, bool header) {
  std::ostringstream out;
  if (header)
    out << "n,t,exists_noninduced_map,partner_isomorphic,fm_partners,p,q,r,s,map_biregular\n";
  out << r.n << ',' << r.t << ',' << (r.exists_noninduced_map ? "true" : "false") << ','
      << (r.partner_isomorphic_to_s ? (*r.partner_isomorphic_to_s ? "true" : "false") : "")
      << ',' << r.fm_partners.get_str() << ',';
  if (r.partner_label)
    out << r.partner_label->p.get_str() << ',' << r.partner_label->q.get_str() << ','
        << r.partner_label->r.get_str() << ',' << r.partner_label->s.get_str();
  else
    out << ",,,";
  out << ',' << (r.map_biregular ? (*r.map_biregular ? "true" : "false") : "") << '\n';
  return out.str();
}

std::string irregular_csv(long n, const std::vector<IrregularValue>& values, bool header) {
  std::ostringstream out;
  if (header) out << "n,t,ell\n";
  for (const IrregularValue& v : values) out << n << ',' << v.t << ',' << v.ell << '\n';
  return out.str();
}

std::string classification_md(const BirClassification& c) {
  std::ostringstream out;
  out << "| field | value |\n|---|---|\n";
  out << "| n | " << c.n << " |\n";
  out << "| t | " << c.t << " |\n";
  out << "| Bir | " << to_string(c.group) << " |\n";
  out << "| Aut | " << to_string(c.aut_group) << " |\n";
  out << "| case (j,k) | " << (c.case_jk ? case_str(c.case_jk) : "/") << " |\n";
  out << "| symplectic | " << (c.symplectic.empty() ? "/" : sympl_str(c.symplectic)) << " |\n";
  if (c.nu)
    out << "| nu | " << c.nu->x.get_str() << "h " << (c.nu->y < 0 ? "- " : "+ ")
        << Int(abs(c.nu->y)).get_str() << "d |\n";
  else
    out << "| nu | / |\n";
  out << "| invariant | "
      << (c.invariant == InvariantLattice::None ? "/" : to_string(c.invariant, c.n)) << " |\n";
  out << "| chambers | " << (c.chamber_count ? std::to_string(*c.chamber_count) : "/")
      << " |\n";
  out << "| irregular | " << (c.irregular ? "yes" : "no") << " |\n";
  out << "| biregular | " << (c.biregular ? "yes" : "no") << " |\n";
  out << "| regularizable | " << (c.regularizable ? "yes" : "no") << " |\n";
  out << "| not_hilbert_model | " << (c.not_hilbert_model ? "yes" : "no") << " |\n";
  return out.str();
}

} // namespace hilbk3
