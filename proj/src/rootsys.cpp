#include "g2mae/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2mae::rootsys {

bool Root::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long k) { return k == 0; });
}

bool Root::is_nonnegative() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long k) { return k >= 0; });
}

Root Root::negated() const {
  Root r = *this;
  for (auto& k : r.coeffs) k = -k;
  return r;
}

std::string Root::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    long k = coeffs[i];
    if (k == 0) continue;
    if (out.empty()) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? "-" : "+";
    }
    long a = k < 0 ? -k : k;
    if (a != 1) out += std::to_string(a);
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

RootSystem::RootSystem(int rank, QMatrix gram, std::vector<Root> positive_roots)
    : rank_(rank), gram_(std::move(gram)), positive_(std::move(positive_roots)) {
  if (rank_ <= 0 || gram_.rows() != static_cast<std::size_t>(rank_) || !gram_.is_symmetric())
    throw std::invalid_argument("RootSystem: Gram matrix must be symmetric of size rank");
  for (int i = 0; i < rank_; ++i)
    if (sgn(gram_.at(i, i)) <= 0) throw std::invalid_argument("RootSystem: Gram diagonal not positive");
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      Rat c = 2 * gram_.at(i, j) / gram_.at(j, j);
      if (c.get_den() != 1) throw std::invalid_argument("RootSystem: Cartan entry not an integer");
      if (i == j && c != 2) throw std::invalid_argument("RootSystem: Cartan diagonal != 2");
      if (i != j && sgn(c) > 0) throw std::invalid_argument("RootSystem: positive off-diagonal Cartan entry");
    }
  for (const auto& r : positive_) {
    if (r.coeffs.size() != static_cast<std::size_t>(rank_))
      throw std::invalid_argument("RootSystem: root length mismatch");
    if (r.is_zero() || !r.is_nonnegative())
      throw std::invalid_argument("RootSystem: positive roots must be nonzero and sign-pure");
  }
}

std::vector<Root> RootSystem::all_roots() const {
  std::vector<Root> out = positive_;
  for (const auto& r : positive_) out.push_back(r.negated());
  return out;
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
  Rat s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (a.coeffs[i] != 0 && b.coeffs[j] != 0) s += Rat(a.coeffs[i]) * Rat(b.coeffs[j]) * gram_.at(i, j);
  return s;
}

bool RootSystem::contains(const Root& a) const {
  for (const auto& r : positive_)
    if (r == a || r.negated() == a) return true;
  return false;
}

Root RootSystem::simple(int i) const {
  std::vector<long> c(rank_, 0);
  c[i - 1] = 1;
  return Root(std::move(c));
}

RootSystem build_g2() {
  QMatrix g(2, 2);
  g.at(0, 0) = rat(2, 3);
  g.at(0, 1) = rat(-1);
  g.at(1, 0) = rat(-1);
  g.at(1, 1) = rat(2);
  std::vector<Root> pos = {Root({1, 0}), Root({0, 1}), Root({1, 1}),
                           Root({2, 1}), Root({3, 1}), Root({3, 2})};
  return RootSystem(2, std::move(g), std::move(pos));
}

Root g2_delta() { return Root({3, 2}); }

Root g2_gamma(int i) {
  if (i < 0 || i > 3) throw std::domain_error("g2_gamma: i out of range");
  return Root({i, 1});
}

long grading_function(const RootSystem& rs, const std::set<int>& pi1, const Root& alpha) {
  if (!rs.contains(alpha)) throw std::domain_error("grading_function: not a root of the system");
  for (int i : pi1)
    if (i < 1 || i > rs.rank()) throw std::domain_error("grading_function: bad simple-root index");
  long d = 0;
  for (int i : pi1) d += alpha.coeffs[i - 1];
  return d;
}

std::vector<Gradation> enumerate_gradations(const RootSystem& rs) {
  std::vector<Gradation> out;
  const int l = rs.rank();
  for (unsigned mask = 1; mask < (1u << l); ++mask) {
    Gradation g;
    for (int i = 0; i < l; ++i)
      if (mask & (1u << i)) g.pi1.insert(i + 1);
    for (const auto& r : rs.all_roots()) {
      long d = grading_function(rs, g.pi1, r);
      g.level_sets[d].push_back(r);
      g.depth = std::max(g.depth, d < 0 ? -d : d);
    }
    for (auto& [lvl, roots] : g.level_sets) std::sort(roots.begin(), roots.end());
    out.push_back(std::move(g));
  }
  return out;
}

FlagGradation sl_flag_gradation(const std::vector<int>& dims) {
  long n = 0;
  for (int d : dims) {
    if (d <= 0) throw std::domain_error("sl_flag_gradation: block dimensions must be positive");
    n += d;
  }
  if (dims.empty() || n < 2) throw std::domain_error("sl_flag_gradation: need dim V >= 2");

  const int k = static_cast<int>(dims.size());
  std::vector<int> block_of(n);
  {
    long pos = 0;
    for (int b = 0; b < k; ++b)
      for (int t = 0; t < dims[b]; ++t) block_of[pos++] = b;
  }
  auto unit_degree = [&](long a, long b) { return block_of[a] - block_of[b]; };

  FlagGradation fg;
  fg.dims = dims;
  for (int i = -(k - 1); i <= k - 1; ++i) {
    long d = 0;
    for (int b = 0; b < k; ++b) {
      int b2 = b - i;  // E_ab with block(a) = b, block(b) = b2 has degree i
      if (b2 >= 0 && b2 < k) d += static_cast<long>(dims[b]) * dims[b2];
    }
    if (i == 0) d -= 1;  // traceless
    fg.dim_table[i] = d;
  }

  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb, checked exhaustively on
  // matrix units: every surviving unit must have block degree i+j, and for
  // |i+j| >= k the bracket must vanish outright.
  struct Unit {
    long r, s;
  };
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        for (long d = 0; d < n; ++d) {
          const int deg = unit_degree(a, b) + unit_degree(c, d);
          std::vector<Unit> result;
          if (b == c) result.push_back({a, d});
          if (d == a) result.push_back({c, b});
          if (result.size() == 2 && result[0].r == result[1].r && result[0].s == result[1].s)
            result.clear();  // the two terms cancel
          for (const auto& u : result) {
            if (unit_degree(u.r, u.s) != deg)
              throw std::logic_error("sl_flag_gradation: bracket closure violated");
            if (deg >= k || deg <= -k)
              throw std::logic_error("sl_flag_gradation: nonzero bracket beyond depth");
          }
          ++fg.checked_pairs;
        }
  return fg;
}

}  // namespace g2mae::rootsys
