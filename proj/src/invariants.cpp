#include "g2mae/invariants.hpp"

#include <stdexcept>

namespace g2mae::invariants {

using g2rep::OpName;

namespace {

QForm mono(const MultiIndex& mi, long c) { return QForm::monomial(10, mi, Rat(c)); }

NamedForm make_named(std::string name, QForm f) {
  if (!is_invariant(f))
    throw std::logic_error("invariants: named form '" + name + "' failed re-substitution");
  const QMatrix hd = g2rep::ad_operator(OpName::Hdelta);
  bool first = true;
  Rat w = 0;
  for (const auto& [mi, c] : f.terms()) {
    Rat mw = monomial_weight(hd, mi);
    if (first) {
      w = mw;
      first = false;
    } else if (mw != w) {
      throw std::logic_error("invariants: named form '" + name + "' is not an H_d eigenform");
    }
  }
  return {std::move(name), std::move(f), w.get_num().get_si()};
}

// Span equality over Q: both sets of forms, as vectors, have the same rank
// individually, jointly, and the expected dimension.
bool same_span(const std::vector<QForm>& a, const std::vector<QForm>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const long n = binom(a[0].dim(), a[0].degree());
  QMatrix ma(a.size(), n), mb(b.size(), n), mab(a.size() + b.size(), n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto v = form_to_vector(a[i]);
    for (long j = 0; j < n; ++j) mab.at(i, j) = ma.at(i, j) = v[j];
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto v = form_to_vector(b[i]);
    for (long j = 0; j < n; ++j) mab.at(a.size() + i, j) = mb.at(i, j) = v[j];
  }
  const std::size_t ra = rank(ma), rb = rank(mb), rab = rank(mab);
  return ra == rb && rb == rab;
}

}  // namespace

bool is_invariant(const QForm& f) {
  for (OpName n : {OpName::Ealpha1, OpName::Eminusalpha1, OpName::Halpha1})
    if (!derivation_extend(g2rep::ad_operator(n), f).is_zero()) return false;
  return true;
}

const std::vector<NamedForm>& generators() {
  static const std::vector<NamedForm> gens = [] {
    std::vector<NamedForm> g;
    g.push_back(make_named("E_d", QForm::covector(10, 4)));
    g.push_back(make_named("E_-d", QForm::covector(10, 9)));
    g.push_back(make_named("w2+", mono({1, 2}, 1) - mono({0, 3}, 3)));
    g.push_back(make_named("w2-", mono({6, 7}, 1) - mono({5, 8}, 3)));
    g.push_back(make_named(
        "w2", mono({0, 5}, 3) + mono({1, 6}, 1) + mono({2, 7}, 1) + mono({3, 8}, 3)));
    g.push_back(make_named("w4+", mono({0, 1, 2, 3}, 1)));
    g.push_back(make_named("w4-", mono({5, 6, 7, 8}, 1)));
    g.push_back(make_named("w4", mono({0, 1, 5, 6}, 1) + mono({0, 2, 5, 7}, 1) +
                                     mono({0, 3, 6, 7}, 1) + mono({1, 2, 5, 8}, 1) +
                                     mono({1, 3, 6, 8}, 1) + mono({2, 3, 7, 8}, 1)));
    return g;
  }();
  return gens;
}

const NamedForm& generator(const std::string& name) {
  for (const auto& g : generators())
    if (g.name == name) return g;
  throw std::domain_error("invariants: unknown generator '" + name + "'");
}

std::vector<QForm> solved_invariants(int k, ExecPolicy pol) {
  if (k < 1 || k > 5) throw std::domain_error("solved_invariants: degree must be in 1..5");
  const std::vector<QMatrix> ops = {g2rep::ad_operator(OpName::Ealpha1),
                                    g2rep::ad_operator(OpName::Eminusalpha1)};
  return joint_invariants(ops, k, 10, pol);
}

std::vector<NamedForm> invariant_basis(int k) {
  if (k < 1 || k > 5) throw std::domain_error("invariant_basis: degree must be in 1..5");
  const auto& G = generators();
  auto g = [&](const char* n) -> const QForm& { return generator(n).form; };

  std::vector<NamedForm> named;
  switch (k) {
    case 1:
      named.push_back(G[0]);
      named.push_back(G[1]);
      break;
    case 2:
      named.push_back(make_named("E_d^E_-d", wedge(g("E_d"), g("E_-d"))));
      named.push_back(G[2]);
      named.push_back(G[3]);
      named.push_back(G[4]);
      break;
    case 3:
      named.push_back(make_named("E_d^w2+", wedge(g("E_d"), g("w2+"))));
      named.push_back(make_named("E_d^w2-", wedge(g("E_d"), g("w2-"))));
      named.push_back(make_named("E_-d^w2+", wedge(g("E_-d"), g("w2+"))));
      named.push_back(make_named("E_-d^w2-", wedge(g("E_-d"), g("w2-"))));
      named.push_back(make_named("E_d^w2", wedge(g("E_d"), g("w2"))));
      named.push_back(make_named("E_-d^w2", wedge(g("E_-d"), g("w2"))));
      break;
    case 4: {
      const QForm dd = wedge(g("E_d"), g("E_-d"));
      named.push_back(make_named("E_d^E_-d^w2+", wedge(dd, g("w2+"))));
      named.push_back(make_named("E_d^E_-d^w2-", wedge(dd, g("w2-"))));
      named.push_back(make_named("E_d^E_-d^w2", wedge(dd, g("w2"))));
      named.push_back(make_named("w2+^w2-", wedge(g("w2+"), g("w2-"))));
      named.push_back(make_named("w2+^w2", wedge(g("w2+"), g("w2"))));
      named.push_back(make_named("w2-^w2", wedge(g("w2-"), g("w2"))));
      named.push_back(G[5]);
      named.push_back(G[6]);
      named.push_back(G[7]);
      break;
    }
    case 5:
      return twelve_five_forms();
  }

  // Certificate: the named products span exactly the solver's kernel.
  std::vector<QForm> plain;
  for (const auto& nf : named) plain.push_back(nf.form);
  const auto solved = solved_invariants(k);
  if (plain.size() != solved.size() || !same_span(plain, solved))
    throw std::logic_error("invariant_basis: named basis does not match solved invariants");
  return named;
}

std::vector<NamedForm> twelve_five_forms() {
  static const std::vector<NamedForm> twelve = [] {
    auto g = [&](const char* n) -> const QForm& { return generator(n).form; };
    const std::vector<std::pair<std::string, QForm>> items = {
        {"w2+^w2-^E_d", wedge(wedge(g("w2+"), g("w2-")), g("E_d"))},
        {"w2+^w2-^E_-d", wedge(wedge(g("w2+"), g("w2-")), g("E_-d"))},
        {"w2+^w2^E_d", wedge(wedge(g("w2+"), g("w2")), g("E_d"))},
        {"w2+^w2^E_-d", wedge(wedge(g("w2+"), g("w2")), g("E_-d"))},
        {"w2-^w2^E_d", wedge(wedge(g("w2-"), g("w2")), g("E_d"))},
        {"w2-^w2^E_-d", wedge(wedge(g("w2-"), g("w2")), g("E_-d"))},
        {"w4+^E_d", wedge(g("w4+"), g("E_d"))},
        {"w4+^E_-d", wedge(g("w4+"), g("E_-d"))},
        {"w4-^E_d", wedge(g("w4-"), g("E_d"))},
        {"w4-^E_-d", wedge(g("w4-"), g("E_-d"))},
        {"w4^E_d", wedge(g("w4"), g("E_d"))},
        {"w4^E_-d", wedge(g("w4"), g("E_-d"))},
    };
    std::vector<NamedForm> out;
    for (const auto& [n, f] : items) out.push_back(make_named(n, f));

    std::vector<QForm> plain;
    for (const auto& nf : out) plain.push_back(nf.form);
    const auto solved = solved_invariants(5);
    if (plain.size() != 12 || solved.size() != 12 || !same_span(plain, solved))
      throw std::logic_error("twelve_five_forms: products do not span the invariant 5-forms");
    return out;
  }();
  return twelve;
}

std::map<std::string, long> conformal_weights() {
  std::map<std::string, long> w;
  for (const auto& g : generators()) w[g.name] = g.hdelta_weight;
  for (const auto& f : twelve_five_forms()) w[f.name] = f.hdelta_weight;
  return w;
}

}  // namespace g2mae::invariants
