#include "g2mae/json_io.hpp"

namespace g2mae::json_io {

const char* kToolVersion = "0.1.0";

json matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json form_json(const QForm& f) {
  json terms = json::array();
  for (const auto& [mi, c] : f.terms()) {
    json t;
    t["idx"] = mi;
    t["coeff"] = rat_str(c);
    terms.push_back(std::move(t));
  }
  json out;
  out["degree"] = f.degree();
  out["terms"] = std::move(terms);
  return out;
}

json poly_json(const PolyU& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    json mono = json::array();
    for (auto v : m) mono.push_back(uvar_name(v));
    t["monomial"] = std::move(mono);
    t["coeff"] = rat_str(c);
    terms.push_back(std::move(t));
  }
  json out;
  out["terms"] = std::move(terms);
  return out;
}

json gradation_json(const rootsys::Gradation& g) {
  json out;
  json pi1 = json::array();
  for (int i : g.pi1) pi1.push_back("a" + std::to_string(i));
  out["pi1"] = std::move(pi1);
  json levels = json::object();
  for (const auto& [lvl, roots] : g.level_sets) {
    json arr = json::array();
    for (const auto& r : roots) arr.push_back(r.to_string());
    levels[std::to_string(lvl)] = std::move(arr);
  }
  out["levels"] = std::move(levels);
  out["depth"] = g.depth;
  return out;
}

json named_form_json(const invariants::NamedForm& nf) {
  json out = form_json(nf.form);
  out["name"] = nf.name;
  out["hdelta_weight"] = nf.hdelta_weight;
  return out;
}

json mae_entry_json(const mae::MAEEntry& e) {
  json out;
  out["name"] = e.name;
  if (!e.short_name.empty()) out["short_name"] = e.short_name;
  out["form"] = form_json(e.form);
  out["poly"] = poly_json(e.poly);
  out["expanded"] = e.poly.to_string();
  if (!e.minor_expr.empty()) out["minors"] = e.minor_expr;
  out["discrepancy"] = e.discrepancy;
  return out;
}

json point_json(const std::array<Rat, 15>& pt) {
  json out = json::object();
  for (int v = 0; v < kNumUVars; ++v) out[uvar_name(v)] = rat_str(pt[v]);
  return out;
}

json separation_json(const equivalence::SeparationReport& r) {
  json out;
  out["pair"] = {r.pair[0], r.pair[1]};
  json ranks = json::object();
  for (int k = 0; k < 2; ++k) {
    json arr = json::array();
    for (auto v : r.ranks[k]) arr.push_back(v);
    ranks[r.pair[k]] = std::move(arr);
  }
  out["ranks"] = std::move(ranks);
  out["verdict"] = r.verdict;
  if (r.witness) out["witness"] = point_json(*r.witness);
  return out;
}

json envelope(const std::string& command, json payload) {
  json out;
  out["command"] = command;
  out["format"] = "json";
  out["payload"] = std::move(payload);
  out["toolversion"] = kToolVersion;
  return out;
}

}  // namespace g2mae::json_io
