#include "g2mae/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace g2mae::equivalence {

QMatrix tau() {
  QMatrix t(10, 10);
  for (int i = 0; i < 5; ++i) {
    t.at(5 + i, i) = 1;   // dx^i -> du_i
    t.at(i, 5 + i) = -1;  // du_i -> -dx^i
  }
  return t;
}

QMatrix xi() {
  QMatrix x = QMatrix::identity(10);
  x.at(4, 4) = 0;
  x.at(9, 9) = 0;
  x.at(9, 4) = 1;   // dx^4 -> du_4
  x.at(4, 9) = -1;  // du_4 -> -dx^4
  return x;
}

QMatrix standard_J() {
  QMatrix j(10, 10);
  for (int i = 0; i < 5; ++i) {
    j.at(i, 5 + i) = 1;
    j.at(5 + i, i) = -1;
  }
  return j;
}

bool is_symplectic(const QMatrix& S) {
  if (S.rows() != 10 || S.cols() != 10) return false;
  return S.transpose() * standard_J() * S == standard_J();
}

mae::MAEEntry act_on_equation(const QMatrix& S, const mae::MAEEntry& e) {
  mae::MAEEntry out;
  out.name = e.name + " (transported)";
  out.form = pullback(S, e.form);
  out.poly = mae::restrict_to_lagrangian(out.form);
  return out;
}

Partition classify(const std::vector<mae::MAEEntry>& entries, const std::vector<QMatrix>& gens) {
  const int n = static_cast<int>(entries.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  // Constant polynomials are pooled into one trivial class up front.
  int first_const = -1;
  for (int i = 0; i < n; ++i) {
    if (!entries[i].poly.is_constant()) continue;
    if (first_const < 0)
      first_const = i;
    else
      unite(i, first_const);
  }

  std::vector<PolyU> canon(n);
  for (int i = 0; i < n; ++i) canon[i] = entries[i].poly.normalized();

  for (const auto& S : gens) {
    if (!is_symplectic(S)) throw std::domain_error("classify: generator is not symplectic");
    for (int i = 0; i < n; ++i) {
      const PolyU image = act_on_equation(S, entries[i]).poly.normalized();
      int j = -1;
      for (int k = 0; k < n; ++k)
        if (canon[k] == image) {
          j = k;
          break;
        }
      if (j < 0)
        throw std::logic_error("classify: transported equation left the catalogue");
      unite(i, j);
    }
  }

  std::vector<std::vector<int>> classes;
  std::vector<int> class_of(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (class_of[r] < 0) {
      class_of[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[class_of[r]].push_back(i);
  }

  Partition p;
  p.classes = classes;
  for (const auto& cls : classes) {
    int best = -1;
    for (int i : cls) {
      if (entries[i].poly.is_constant()) continue;
      if (best < 0 || entries[i].poly.degree() < entries[best].poly.degree()) best = i;
    }
    if (best < 0) continue;  // purely trivial class
    ++p.nontrivial_count;
    p.representatives.push_back(entries[best].short_name.empty() ? entries[best].name
                                                                 : entries[best].short_name);
  }
  return p;
}

SymbolMatrix symbol(const PolyU& F, const std::array<Rat, 15>& point) {
  QMatrix s(5, 5);
  for (int i = 0; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) {
      Rat v = F.derivative(uvar_id(i, j)).evaluate(point);
      if (i != j) v /= 2;
      s.at(i, j) = v;
      s.at(j, i) = v;
    }
  const std::size_t r = rank_bareiss(s);
  return {std::move(s), r};
}

std::optional<std::array<Rat, 15>> sample_on_hypersurface(const PolyU& F, RatSampler& rs,
                                                          int max_attempts) {
  // Diagonal variables first (every catalogue polynomial is linear in each
  // diagonal entry it contains), u00 leading so that Q1 lands in the chart
  // that solves u00 against 3*u33.
  std::vector<int> order;
  for (int i = 0; i <= 4; ++i) order.push_back(uvar_id(i, i));
  for (int v = 0; v < kNumUVars; ++v)
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (int v : order) {
      if (F.degree_in(v) != 1) continue;
      std::array<Rat, 15> pt;
      for (int w = 0; w < kNumUVars; ++w) pt[w] = (w == v) ? Rat(0) : rs.next();
      const PolyU dv = F.derivative(v);
      const Rat a = dv.evaluate(pt);
      if (sgn(a) == 0) continue;
      const Rat b = F.evaluate(pt);  // F = a*v + b at this assignment
      pt[v] = -b / a;
      if (sgn(F.evaluate(pt)) != 0)
        throw std::logic_error("sample_on_hypersurface: solved point not on hypersurface");
      return pt;
    }
  }
  return std::nullopt;
}

std::set<std::size_t> attained_ranks(const mae::MAEEntry& e, std::uint64_t seed, int samples,
                                     std::optional<std::array<Rat, 15>>* deficient_witness) {
  std::set<std::size_t> ranks;
  std::optional<std::array<Rat, 15>> witness;

  auto consider = [&](const std::array<Rat, 15>& pt) {
    if (sgn(e.poly.evaluate(pt)) != 0) return;  // not on the hypersurface
    const auto s = symbol(e.poly, pt);
    ranks.insert(s.rank);
    if (s.rank < kFullSymbolRank && !witness) witness = pt;
  };

  // Deterministic seeds: the origin, the elementary diagonal matrices, and
  // a few rank-one symmetric matrices x x^T.
  std::array<Rat, 15> zero{};
  consider(zero);
  for (int i = 0; i <= 4; ++i) {
    std::array<Rat, 15> pt{};
    pt[uvar_id(i, i)] = 1;
    consider(pt);
  }
  const std::array<std::array<long, 5>, 3> xs = {{{1, 1, 1, 1, 1}, {1, -1, 2, 0, 1}, {2, 1, 0, 1, -1}}};
  for (const auto& x : xs) {
    std::array<Rat, 15> pt{};
    for (int i = 0; i <= 4; ++i)
      for (int j = i; j <= 4; ++j) pt[uvar_id(i, j)] = Rat(x[i]) * Rat(x[j]);
    consider(pt);
  }

  // Chart samples; per-index seeding keeps the stream independent of the
  // thread count.
  std::vector<std::optional<std::array<Rat, 15>>> pts(samples);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (int k = 0; k < samples; ++k) {
    RatSampler rs(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(k) + 1);
    pts[k] = sample_on_hypersurface(e.poly, rs);
  }
  for (const auto& p : pts)
    if (p) consider(*p);

  if (deficient_witness) *deficient_witness = witness;
  return ranks;
}

SeparationReport separate(const mae::MAEEntry& a, const mae::MAEEntry& b, std::uint64_t seed,
                          int samples) {
  SeparationReport rep;
  rep.pair = {a.short_name.empty() ? a.name : a.short_name,
              b.short_name.empty() ? b.name : b.short_name};

  std::optional<std::array<Rat, 15>> wa, wb;
  rep.ranks[0] = attained_ranks(a, seed, samples, &wa);
  rep.ranks[1] = attained_ranks(b, seed, samples, &wb);

  // A constant polynomial has no hypersurface to compare on.
  if (a.poly.is_constant() || b.poly.is_constant()) {
    rep.verdict = "inconclusive";
    return rep;
  }

  const bool deficient_a = wa.has_value();
  const bool deficient_b = wb.has_value();
  const bool const_a = a.poly.degree() <= 1;
  const bool const_b = b.poly.degree() <= 1;

  if (deficient_a != deficient_b && (deficient_a ? const_b : const_a)) {
    rep.verdict = "separated";
    rep.witness = deficient_a ? wa : wb;
  } else {
    rep.verdict = "inconclusive";
  }
  return rep;
}

}  // namespace g2mae::equivalence
