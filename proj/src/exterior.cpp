#include "g2mae/exterior.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace g2mae {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<MultiIndex> multi_indices(int dim, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > dim) return out;
  MultiIndex cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == dim - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

long multi_index_rank(const MultiIndex& mi, int dim) {
  const int k = static_cast<int>(mi.size());
  long r = 0;
  int prev = -1;
  for (int pos = 0; pos < k; ++pos) {
    for (int v = prev + 1; v < mi[pos]; ++v) r += binom(dim - v - 1, k - pos - 1);
    prev = mi[pos];
  }
  return r;
}

int sort_with_sign(MultiIndex& mi) {
  int sign = 1;
  for (std::size_t i = 1; i < mi.size(); ++i) {
    int v = mi[i];
    std::size_t j = i;
    while (j > 0 && mi[j - 1] > v) {
      mi[j] = mi[j - 1];
      --j;
      sign = -sign;
    }
    mi[j] = v;
  }
  for (std::size_t i = 1; i < mi.size(); ++i)
    if (mi[i] == mi[i - 1]) return 0;
  return sign;
}

QForm derivation_extend(const QMatrix& X, const QForm& om) {
  if (static_cast<int>(X.rows()) != om.dim() || X.rows() != X.cols())
    throw std::domain_error("derivation_extend: operator/form dimension mismatch");
  QForm out(om.dim(), om.degree());
  for (const auto& [mi, c] : om.terms()) {
    for (std::size_t p = 0; p < mi.size(); ++p) {
      for (std::size_t i = 0; i < X.rows(); ++i) {
        const Rat& x = X.at(i, mi[p]);
        if (sgn(x) == 0) continue;
        MultiIndex m = mi;
        m[p] = static_cast<int>(i);
        out.add_term(std::move(m), c * x);
      }
    }
  }
  return out;
}

QForm pullback(const QMatrix& S, const QForm& om) {
  if (static_cast<int>(S.rows()) != om.dim() || S.rows() != S.cols())
    throw std::domain_error("pullback: matrix/form dimension mismatch");
  if (rank_bareiss(S) != S.rows()) throw std::domain_error("pullback: singular matrix");
  // Image of covector j as a 1-form.
  std::vector<QForm> img;
  img.reserve(S.cols());
  for (std::size_t j = 0; j < S.cols(); ++j) {
    QForm f(om.dim(), 1);
    for (std::size_t i = 0; i < S.rows(); ++i)
      if (sgn(S.at(i, j)) != 0) f.add_term({static_cast<int>(i)}, S.at(i, j));
    img.push_back(std::move(f));
  }
  QForm out(om.dim(), om.degree());
  for (const auto& [mi, c] : om.terms()) {
    QForm prod(om.dim(), 0);
    prod.add_term({}, Rat(1));
    for (int idx : mi) prod = wedge(prod, img[idx]);
    out = out + prod.scaled(c);
  }
  return out;
}

QMatrix derivation_matrix(const QMatrix& X, int degree, int dim, ExecPolicy pol) {
  const auto basis = multi_indices(dim, degree);
  const long n = static_cast<long>(basis.size());
  QMatrix D(n, n);
  // Columns are independent of each other: assembly parallelizes per basis
  // element.
  const bool par = pol != ExecPolicy::Serial;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (par)
#endif
  for (long col = 0; col < n; ++col) {
    QForm e = QForm::monomial(dim, basis[col], Rat(1));
    QForm im = derivation_extend(X, e);
    for (const auto& [mi, c] : im.terms()) D.at(multi_index_rank(mi, dim), col) = c;
  }
  (void)par;
  return D;
}

std::vector<QForm> joint_invariants(const std::vector<QMatrix>& ops, int degree, int dim,
                                    ExecPolicy pol) {
  for (const auto& X : ops)
    if (X.rows() != static_cast<std::size_t>(dim) || X.cols() != static_cast<std::size_t>(dim))
      throw std::domain_error("joint_invariants: operator dimension mismatch");
  const long n = binom(dim, degree);
  if (ops.empty()) {
    std::vector<QForm> all;
    for (const auto& mi : multi_indices(dim, degree))
      all.push_back(QForm::monomial(dim, mi, Rat(1)));
    return all;
  }
  QMatrix stacked(ops.size() * n, n);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    QMatrix D = derivation_matrix(ops[k], degree, dim, pol);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        if (sgn(D.at(i, j)) != 0) stacked.at(k * n + i, j) = D.at(i, j);
  }
  std::vector<QForm> out;
  for (auto& v : nullspace(stacked, pol)) out.push_back(vector_to_form(v, dim, degree));
  return out;
}

Rat monomial_weight(const QMatrix& H, const MultiIndex& mi) {
  Rat w = 0;
  for (int i : mi) w += H.at(i, i);
  return w;
}

std::vector<QForm> eigen_filter(const QMatrix& H, const Rat& weight,
                                const std::vector<QForm>& forms) {
  if (!H.is_diagonal()) throw std::domain_error("eigen_filter: H must be diagonal");
  std::vector<QForm> out;
  for (const auto& f : forms) {
    QForm part(f.dim(), f.degree());
    for (const auto& [mi, c] : f.terms())
      if (monomial_weight(H, mi) == weight) part.add_term(mi, c);
    if (!part.is_zero()) out.push_back(std::move(part));
  }
  return out;
}

std::vector<Rat> form_to_vector(const QForm& f) {
  std::vector<Rat> v(binom(f.dim(), f.degree()));
  for (const auto& [mi, c] : f.terms()) v[multi_index_rank(mi, f.dim())] = c;
  return v;
}

QForm vector_to_form(const std::vector<Rat>& v, int dim, int degree) {
  const auto basis = multi_indices(dim, degree);
  QForm f(dim, degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (sgn(v[i]) != 0) f.add_term(basis[i], v[i]);
  return f;
}

}  // namespace g2mae
