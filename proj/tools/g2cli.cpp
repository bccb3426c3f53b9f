#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "g2mae/equivalence.hpp"
#include "g2mae/g2rep.hpp"
#include "g2mae/invariants.hpp"
#include "g2mae/json_io.hpp"
#include "g2mae/mae.hpp"
#include "g2mae/parakahler.hpp"
#include "g2mae/rootsys.hpp"
#include "g2mae/selftest.hpp"

using namespace g2mae;
using json_io::json;

namespace {

void emit(const json& envelope) { std::cout << envelope.dump(2) << "\n"; }

int cmd_roots(bool use_json) {
  const auto rs = rootsys::build_g2();
  const auto delta = rootsys::g2_delta();
  if (use_json) {
    json payload;
    payload["rank"] = rs.rank();
    payload["gram"] = json_io::matrix_json(rs.gram());
    json pos = json::array();
    for (const auto& r : rs.positive_roots()) pos.push_back(r.to_string());
    payload["positive_roots"] = std::move(pos);
    payload["delta"] = delta.to_string();
    json checks;
    checks["(a1,d)"] = rat_str(rs.inner(rs.simple(1), delta));
    checks["(a2,d)"] = rat_str(rs.inner(rs.simple(2), delta));
    checks["(d,d)"] = rat_str(rs.inner(delta, delta));
    checks["(a1,a2)"] = rat_str(rs.inner(rs.simple(1), rs.simple(2)));
    payload["checks"] = std::move(checks);
    emit(json_io::envelope("roots", payload));
    return 0;
  }
  std::cout << "G₂ root system over Π = {a1, a2}\n";
  std::cout << "gram:\n";
  for (int i = 0; i < 2; ++i) {
    std::cout << "  ";
    for (int j = 0; j < 2; ++j) std::cout << rat_str(rs.gram().at(i, j)) << (j ? "\n" : "  ");
  }
  std::cout << "positive roots:";
  for (const auto& r : rs.positive_roots()) std::cout << " " << r.to_string();
  std::cout << "\nmaximal root δ = " << delta.to_string() << "\n";
  std::cout << "pairing checks: (a1,d)=" << rat_str(rs.inner(rs.simple(1), delta))
            << "  (a2,d)=" << rat_str(rs.inner(rs.simple(2), delta))
            << "  (d,d)=" << rat_str(rs.inner(delta, delta))
            << "  (a1,a2)=" << rat_str(rs.inner(rs.simple(1), rs.simple(2))) << "\n";
  for (int k = 0; k <= 3; ++k) {
    std::cout << "  (a2+" << k << "*a1,d)=" << rat_str(rs.inner(rootsys::g2_gamma(k), delta))
              << "\n";
  }
  return 0;
}

int cmd_gradations(const std::string& algebra, const std::string& pi1_arg,
                   const std::string& flag_arg, bool use_json) {
  if (algebra == "g2") {
    const auto rs = rootsys::build_g2();
    auto gradations = rootsys::enumerate_gradations(rs);
    if (!pi1_arg.empty()) {
      std::set<int> want;
      std::string cur;
      for (char c : pi1_arg + ",") {
        if (c == ',') {
          if (cur.size() == 2 && cur[0] == 'a')
            want.insert(cur[1] - '0');
          else
            throw CLI::ValidationError("--pi1 expects a comma list like a1,a2");
          cur.clear();
        } else {
          cur += c;
        }
      }
      std::erase_if(gradations, [&](const auto& g) { return g.pi1 != want; });
      if (gradations.empty()) throw CLI::ValidationError("--pi1 selects no gradation");
    }
    if (use_json) {
      json payload = json::array();
      for (const auto& g : gradations) payload.push_back(json_io::gradation_json(g));
      emit(json_io::envelope("gradations", payload));
      return 0;
    }
    for (const auto& g : gradations) {
      std::cout << "Π¹ = {";
      bool first = true;
      for (int i : g.pi1) {
        std::cout << (first ? "" : ", ") << "a" << i;
        first = false;
      }
      std::cout << "}  depth " << g.depth << "\n";
      for (const auto& [lvl, roots] : g.level_sets) {
        std::cout << "  R^" << lvl << " = {";
        for (std::size_t i = 0; i < roots.size(); ++i)
          std::cout << (i ? ", " : "") << roots[i].to_string();
        std::cout << "}\n";
      }
    }
    return 0;
  }
  if (algebra == "sl") {
    if (flag_arg.empty()) throw CLI::ValidationError("gradations sl requires --flag d1,d2,...");
    std::vector<int> dims;
    std::string cur;
    for (char c : flag_arg + ",") {
      if (c == ',') {
        try {
          dims.push_back(std::stoi(cur));
        } catch (...) {
          throw CLI::ValidationError("--flag expects positive integers like 1,2,1");
        }
        cur.clear();
      } else {
        cur += c;
      }
    }
    rootsys::FlagGradation fg;
    try {
      fg = rootsys::sl_flag_gradation(dims);
    } catch (const std::domain_error& e) {
      throw CLI::ValidationError(e.what());
    }
    if (use_json) {
      json payload;
      payload["dims"] = fg.dims;
      json table = json::object();
      for (const auto& [i, d] : fg.dim_table) table[std::to_string(i)] = d;
      payload["dim_table"] = std::move(table);
      payload["checked_pairs"] = fg.checked_pairs;
      emit(json_io::envelope("gradations", payload));
      return 0;
    }
    std::cout << "sl flag gradation for blocks (";
    for (std::size_t i = 0; i < dims.size(); ++i) std::cout << (i ? "," : "") << dims[i];
    std::cout << ")\n";
    for (const auto& [i, d] : fg.dim_table)
      std::cout << "  dim g^" << i << " = " << d << "\n";
    std::cout << "bracket closure verified on " << fg.checked_pairs << " matrix-unit pairs\n";
    return 0;
  }
  throw CLI::ValidationError("algebra must be g2 or sl");
}

int cmd_invariants(int degree, bool use_json) {
  const auto basis = invariants::invariant_basis(degree);
  if (use_json) {
    json payload;
    payload["degree"] = degree;
    payload["dimension"] = basis.size();
    json gens = json::array();
    for (const auto& nf : basis) gens.push_back(json_io::named_form_json(nf));
    payload["generators"] = std::move(gens);
    emit(json_io::envelope("invariants", payload));
    return 0;
  }
  std::cout << "invariant " << degree << "-forms: dimension " << basis.size() << "\n";
  for (const auto& nf : basis)
    std::cout << "  " << nf.name << "  (H_d weight " << nf.hdelta_weight << ", "
              << nf.form.term_count() << " terms)\n";
  return 0;
}

int cmd_forms(bool use_json) {
  const auto twelve = invariants::twelve_five_forms();
  if (use_json) {
    json payload = json::array();
    for (const auto& nf : twelve) payload.push_back(json_io::named_form_json(nf));
    emit(json_io::envelope("forms", payload));
    return 0;
  }
  std::cout << "the twelve invariant 5-forms\n";
  for (const auto& nf : twelve)
    std::cout << "  " << nf.name << "  (H_d weight " << nf.hdelta_weight << ", "
              << nf.form.term_count() << " terms)\n";
  return 0;
}

int cmd_equations(const std::string& format) {
  const auto& cat = mae::catalogue();
  if (format == "json") {
    json payload = json::array();
    for (const auto& e : cat) payload.push_back(json_io::mae_entry_json(e));
    emit(json_io::envelope("equations", payload));
    return 0;
  }
  for (const auto& e : cat) {
    std::cout << e.name;
    if (!e.short_name.empty()) std::cout << " [" << e.short_name << "]";
    if (e.discrepancy) std::cout << " (direct evaluation; table row differs)";
    std::cout << "\n  ";
    std::cout << (format == "minors" ? e.minor_expr : e.poly.to_string()) << " = 0\n";
  }
  return 0;
}

int cmd_classify(std::uint64_t seed, bool use_json) {
  const auto& cat = mae::catalogue();
  const auto ptau = equivalence::classify(cat, {equivalence::tau()});
  const auto pboth = equivalence::classify(cat, {equivalence::tau(), equivalence::xi()});
  const auto sep = equivalence::separate(mae::entry("Q1"), mae::entry("L1"), seed);

  auto classes_json = [&](const equivalence::Partition& p) {
    json out = json::array();
    for (const auto& cls : p.classes) {
      json names = json::array();
      for (int i : cls) names.push_back(cat[i].name);
      out.push_back(std::move(names));
    }
    return out;
  };

  if (use_json) {
    json payload;
    payload["tau"] = {{"classes", classes_json(ptau)},
                      {"nontrivial", ptau.nontrivial_count},
                      {"representatives", ptau.representatives}};
    payload["tau_xi"] = {{"classes", classes_json(pboth)},
                         {"nontrivial", pboth.nontrivial_count},
                         {"representatives", pboth.representatives}};
    payload["separation"] = json_io::separation_json(sep);
    emit(json_io::envelope("classify", payload));
    return 0;
  }

  auto print_partition = [&](const char* title, const equivalence::Partition& p) {
    std::cout << title << ": " << p.nontrivial_count << " nontrivial classes, representatives";
    for (const auto& r : p.representatives) std::cout << " " << r;
    std::cout << "\n";
    for (const auto& cls : p.classes) {
      std::cout << "  {";
      for (std::size_t i = 0; i < cls.size(); ++i) {
        std::cout << (i ? ", " : "") << cat[cls[i]].name;
        if (!cat[cls[i]].short_name.empty()) std::cout << "=" << cat[cls[i]].short_name;
      }
      std::cout << "}\n";
    }
  };
  print_partition("generators {tau}", ptau);
  print_partition("generators {tau, xi}", pboth);
  std::cout << "separation (Q1, L1): " << sep.verdict << "; ranks Q1 = {";
  bool first = true;
  for (auto r : sep.ranks[0]) {
    std::cout << (first ? "" : ",") << r;
    first = false;
  }
  std::cout << "}, ranks L1 = {";
  first = true;
  for (auto r : sep.ranks[1]) {
    std::cout << (first ? "" : ",") << r;
    first = false;
  }
  std::cout << "}\n";
  return 0;
}

int cmd_symbol(const std::string& name, const std::string& point_arg, std::uint64_t seed,
               bool use_json) {
  const mae::MAEEntry* e = nullptr;
  try {
    e = &mae::entry(name);
  } catch (const std::domain_error& err) {
    throw CLI::ValidationError(err.what());
  }

  if (!point_arg.empty()) {
    // parse "u00=1,u03=-2/3,..."; unnamed entries default to 0
    std::array<Rat, 15> pt{};
    std::string cur;
    for (char c : point_arg + ",") {
      if (c != ',') {
        cur += c;
        continue;
      }
      const auto eq = cur.find('=');
      if (eq == std::string::npos || eq < 3)
        throw CLI::ValidationError("point entries look like u03=-2/3");
      const std::string var = cur.substr(0, eq);
      if (var.size() != 3 || var[0] != 'u' || !isdigit(var[1]) || !isdigit(var[2]))
        throw CLI::ValidationError("unknown variable '" + var + "'");
      try {
        pt[uvar_id(var[1] - '0', var[2] - '0')] = rat_parse(cur.substr(eq + 1));
      } catch (const std::exception& ex) {
        throw CLI::ValidationError(ex.what());
      }
      cur.clear();
    }
    const auto s = equivalence::symbol(e->poly, pt);
    const bool on_surface = sgn(e->poly.evaluate(pt)) == 0;
    if (use_json) {
      json payload;
      payload["equation"] = e->short_name.empty() ? e->name : e->short_name;
      payload["point"] = json_io::point_json(pt);
      payload["on_hypersurface"] = on_surface;
      payload["symbol"] = json_io::matrix_json(s.m);
      payload["rank"] = s.rank;
      emit(json_io::envelope("symbol", payload));
      return 0;
    }
    std::cout << "symbol of " << name << " at the given point: rank " << s.rank
              << (on_surface ? "" : " (point is NOT on the hypersurface)") << "\n";
    return 0;
  }

  const auto ranks = equivalence::attained_ranks(*e, seed, 100);
  const bool constant = e->poly.degree() <= 1;
  if (use_json) {
    json payload;
    payload["equation"] = e->short_name.empty() ? e->name : e->short_name;
    json arr = json::array();
    for (auto r : ranks) arr.push_back(r);
    payload["attained_ranks"] = std::move(arr);
    payload["constant_symbol"] = constant;
    emit(json_io::envelope("symbol", payload));
    return 0;
  }
  if (constant && ranks.size() == 1) {
    std::cout << "symbol of " << name << ": rank " << *ranks.begin() << " (constant)\n";
  } else {
    std::cout << "symbol of " << name << ": attained ranks {";
    bool first = true;
    for (auto r : ranks) {
      std::cout << (first ? "" : ",") << r;
      first = false;
    }
    std::cout << "} over seeded hypersurface samples\n";
  }
  return 0;
}

int cmd_selftest(std::uint64_t seed, bool use_json) {
  const auto results = selftest::run_all(seed);
  if (use_json) {
    json payload = json::array();
    for (const auto& r : results)
      payload.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    emit(json_io::envelope("selftest", payload));
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
      std::cout << "\n";
    }
  }
  if (!selftest::all_passed(results)) {
    for (const auto& r : results)
      if (!r.pass) std::cerr << "certificate failed: " << r.name << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact G2 Monge-Ampere pipeline"};
  app.require_subcommand(1);
  app.fallthrough();

  bool use_json = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", use_json, "emit a JSON envelope (byte-deterministic)");
  app.add_option("--seed", seed, "seed for hypersurface sampling")->default_val(0);

  auto* roots = app.add_subcommand("roots", "G2 root system, Gram matrix, pairing checks");

  auto* grad = app.add_subcommand("gradations", "fundamental gradations (g2 or sl)");
  std::string algebra = "g2", pi1_arg, flag_arg;
  grad->add_option("algebra", algebra, "g2 or sl")->required();
  grad->add_option("--pi1", pi1_arg, "restrict to one subset, e.g. a2 or a1,a2");
  grad->add_option("--flag", flag_arg, "sl block sizes, e.g. 1,1 or 2,3");

  auto* inv = app.add_subcommand("invariants", "h'-invariant k-forms on m");
  int degree = 5;
  inv->add_option("--degree", degree, "form degree 1..5")->default_val(5);

  auto* forms = app.add_subcommand("forms", "the twelve invariant 5-forms");

  auto* eqs = app.add_subcommand("equations", "the Monge-Ampere catalogue");
  std::string format = "expanded";
  eqs->add_option("--format", format, "expanded | minors | json")
      ->check(CLI::IsMember({"expanded", "minors", "json"}));

  auto* cls = app.add_subcommand("classify", "contact-equivalence partition and separation");

  auto* sym = app.add_subcommand("symbol", "symbol rank of one equation");
  std::string eqname, point_arg;
  sym->add_option("name", eqname, "equation name (Q1, L1, L2, Q3, D, Q2 or wedge name)")
      ->required();
  sym->add_option("point", point_arg, "optional point, e.g. u33=1,u03=-2");

  auto* st = app.add_subcommand("selftest", "run every internal certificate");

  CLI11_PARSE(app, argc, argv);

  try {
    if (roots->parsed()) return cmd_roots(use_json);
    if (grad->parsed()) return cmd_gradations(algebra, pi1_arg, flag_arg, use_json);
    if (inv->parsed()) {
      if (degree < 1 || degree > 5) throw CLI::ValidationError("--degree must be in 1..5");
      return cmd_invariants(degree, use_json);
    }
    if (forms->parsed()) return cmd_forms(use_json);
    if (eqs->parsed()) return cmd_equations(format);
    if (cls->parsed()) return cmd_classify(seed, use_json);
    if (sym->parsed()) return cmd_symbol(eqname, point_arg, seed, use_json);
    if (st->parsed()) return cmd_selftest(seed, use_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // construction-time certificates throw on failure; name the invariant
    std::cerr << "certificate or input failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
