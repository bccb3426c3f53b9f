#include "g2mae/qmatrix.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace g2mae {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<Rat>& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::domain_error("QMatrix: dimension mismatch in product");
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rat& b = o.at(k, j);
        if (sgn(b) != 0) r.at(i, j) += a * b;
      }
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("QMatrix: shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("QMatrix: shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

QMatrix QMatrix::operator-() const {
  QMatrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

QMatrix QMatrix::scaled(const Rat& c) const {
  QMatrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw std::domain_error("QMatrix: vector length mismatch");
  std::vector<Rat> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(at(i, j)) != 0) r[i] += at(i, j) * v[j];
  return r;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool QMatrix::is_antisymmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

bool QMatrix::is_diagonal() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn(at(i, j)) != 0) return false;
  return true;
}

namespace {

bool use_parallel(ExecPolicy pol, std::size_t work) {
#ifdef _OPENMP
  if (pol == ExecPolicy::Parallel) return true;
  if (pol == ExecPolicy::Auto) return work >= 64;
#else
  (void)pol;
  (void)work;
#endif
  return false;
}

// One Gauss-Jordan pass. The elimination of rows below/above the pivot is
// the data-parallel inner loop: every row update is independent and only
// reads the (frozen) pivot row.
RrefResult rref_impl(QMatrix m, bool parallel) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = nr;
    for (std::size_t i = row; i < nr; ++i)
      if (sgn(m.at(i, col)) != 0) {
        piv = i;
        break;
      }
    if (piv == nr) continue;
    if (piv != row)
      for (std::size_t j = 0; j < nc; ++j) swap(m.at(piv, j), m.at(row, j));
    const Rat inv = 1 / m.at(row, col);
    for (std::size_t j = col; j < nc; ++j) m.at(row, j) *= inv;

#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (long long ii = 0; ii < static_cast<long long>(nr); ++ii) {
        const std::size_t i = static_cast<std::size_t>(ii);
        if (i == row || sgn(m.at(i, col)) == 0) continue;
        const Rat f = m.at(i, col);
        for (std::size_t j = col; j < nc; ++j)
          if (sgn(m.at(row, j)) != 0) m.at(i, j) -= f * m.at(row, j);
      }
    } else
#else
    (void)parallel;
#endif
    {
      for (std::size_t i = 0; i < nr; ++i) {
        if (i == row || sgn(m.at(i, col)) == 0) continue;
        const Rat f = m.at(i, col);
        for (std::size_t j = col; j < nc; ++j)
          if (sgn(m.at(row, j)) != 0) m.at(i, j) -= f * m.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

RrefResult rref(const QMatrix& m, ExecPolicy pol) {
  return rref_impl(m, use_parallel(pol, m.rows()));
}

std::size_t rank(const QMatrix& m, ExecPolicy pol) { return rref(m, pol).pivot_cols.size(); }

std::size_t rank_bareiss(const QMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  // Clear denominators row by row; row scaling does not change the rank.
  std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < nc; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < nc; ++j) {
      mpq_class q = m.at(i, j) * Rat(l);
      a[i][j] = q.get_num();
    }
  }
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = nr;
    for (std::size_t i = row; i < nr; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == nr) continue;
    if (piv != row) std::swap(a[piv], a[row]);
    for (std::size_t i = row + 1; i < nr; ++i) {
      for (std::size_t j = col + 1; j < nc; ++j) {
        mpz_class t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

void normalize_primitive(std::vector<Rat>& v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  for (auto& x : v) x *= Rat(l);
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
  if (g == 0) return;
  for (auto& x : v) x /= Rat(g);
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

std::vector<std::vector<Rat>> nullspace(const QMatrix& m, ExecPolicy pol) {
  RrefResult r = rref(m, pol);
  const std::size_t nc = m.cols();
  std::vector<bool> is_piv(nc, false);
  for (std::size_t c : r.pivot_cols) is_piv[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rat> v(nc);
    v[f] = 1;
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p) v[r.pivot_cols[p]] = -r.mat.at(p, f);
    normalize_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse: matrix not square");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug, ExecPolicy::Serial);
  if (r.pivot_cols.size() < n || r.pivot_cols[n - 1] != n - 1)
    throw std::domain_error("inverse: singular matrix");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

Rat det(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("det: matrix not square");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Rat d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = col; i < n; ++i)
      if (sgn(a.at(i, col)) != 0) {
        piv = i;
        break;
      }
    if (piv == n) return Rat(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) swap(a.at(piv, j), a.at(col, j));
      d = -d;
    }
    d *= a.at(col, col);
    const Rat inv = 1 / a.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a.at(i, col)) == 0) continue;
      const Rat f = a.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j)
        if (sgn(a.at(col, j)) != 0) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return d;
}

}  // namespace g2mae
