#pragma once

#include <vector>

#include "g2mae/qmatrix.hpp"

namespace g2mae::parakahler {

/// Involution with I^2 = id and trace 0 (both eigenspaces n-dimensional).
/// Construction validates the invariants.
class ParaComplexOp {
 public:
  explicit ParaComplexOp(QMatrix I);

  const QMatrix& matrix() const { return I_; }
  std::size_t half_dim() const { return I_.rows() / 2; }

  /// Basis of the +1 / -1 eigenspace.
  const std::vector<std::vector<Rat>>& plus_basis() const { return plus_; }
  const std::vector<std::vector<Rat>>& minus_basis() const { return minus_; }

 private:
  QMatrix I_;
  std::vector<std::vector<Rat>> plus_, minus_;
};

enum class FormKind { Symmetric, Antisymmetric };

/// Nondegenerate bilinear form whose matrix matches its kind exactly.
struct BilinearForm {
  QMatrix m;
  FormKind kind;

  BilinearForm(QMatrix mat, FormKind k);
};

/// w(v, w) = g(v, I w). Requires the eigenspaces of I to be g-isotropic;
/// throws std::invalid_argument otherwise. Output is antisymmetric,
/// nondegenerate, and vanishes on each eigenspace.
BilinearForm kaehler_form(const BilinearForm& g, const ParaComplexOp& I);

/// g(v, w) = -w(I v, w). Requires the eigenspaces of I to be w-Lagrangian.
/// Inverse of kaehler_form on valid inputs.
BilinearForm metric_from_symplectic(const BilinearForm& w, const ParaComplexOp& I);

/// True when the form vanishes identically on the span of the vectors.
bool vanishes_on(const QMatrix& form, const std::vector<std::vector<Rat>>& span);

}  // namespace g2mae::parakahler
