#pragma once

#include <cstddef>
#include <vector>

#include "g2mae/rational.hpp"

namespace g2mae {

/// Dense matrix over Q. The elimination kernels exist twice: a serial
/// reference and an OpenMP row-parallel path; both produce identical output
/// (the parallel loop only distributes independent row updates).
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const std::vector<Rat>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const QMatrix& o) const { return !(*this == o); }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator-() const;
  QMatrix scaled(const Rat& c) const;
  QMatrix transpose() const;

  /// [A, B] = AB - BA
  QMatrix commutator(const QMatrix& o) const { return *this * o - o * *this; }

  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  bool is_diagonal() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

enum class ExecPolicy { Serial, Parallel, Auto };

struct RrefResult {
  QMatrix mat;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const QMatrix& m, ExecPolicy pol = ExecPolicy::Auto);

std::size_t rank(const QMatrix& m, ExecPolicy pol = ExecPolicy::Auto);

/// Fraction-free (Bareiss) rank over a common-denominator-cleared copy.
/// Independent of the rref path; used as a cross-check oracle.
std::size_t rank_bareiss(const QMatrix& m);

/// Basis of { x : m x = 0 }, one vector per free column, brought to a
/// reduced echelon normal form; each vector is rescaled to integer entries
/// of content 1 with positive first nonzero entry.
std::vector<std::vector<Rat>> nullspace(const QMatrix& m, ExecPolicy pol = ExecPolicy::Auto);

/// Throws std::domain_error if singular.
QMatrix inverse(const QMatrix& m);

Rat det(const QMatrix& m);

/// Scales a vector to coprime integer entries with positive first nonzero.
void normalize_primitive(std::vector<Rat>& v);

}  // namespace g2mae
