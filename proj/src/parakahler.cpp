#include "g2mae/parakahler.hpp"

#include <stdexcept>

namespace g2mae::parakahler {

ParaComplexOp::ParaComplexOp(QMatrix I) : I_(std::move(I)) {
  const std::size_t n = I_.rows();
  if (n == 0 || I_.cols() != n || n % 2 != 0)
    throw std::invalid_argument("ParaComplexOp: need a square even-dimensional matrix");
  if (I_ * I_ != QMatrix::identity(n))
    throw std::invalid_argument("ParaComplexOp: I^2 != id");
  Rat tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr += I_.at(i, i);
  if (sgn(tr) != 0) throw std::invalid_argument("ParaComplexOp: trace(I) != 0");
  plus_ = nullspace(I_ - QMatrix::identity(n));
  minus_ = nullspace(I_ + QMatrix::identity(n));
  if (plus_.size() != n / 2 || minus_.size() != n / 2)
    throw std::invalid_argument("ParaComplexOp: eigenspaces are not half-dimensional");
}

BilinearForm::BilinearForm(QMatrix mat, FormKind k) : m(std::move(mat)), kind(k) {
  if (kind == FormKind::Symmetric && !m.is_symmetric())
    throw std::invalid_argument("BilinearForm: matrix not symmetric");
  if (kind == FormKind::Antisymmetric && !m.is_antisymmetric())
    throw std::invalid_argument("BilinearForm: matrix not antisymmetric");
}

bool vanishes_on(const QMatrix& form, const std::vector<std::vector<Rat>>& span) {
  for (const auto& v : span)
    for (const auto& w : span) {
      Rat s = 0;
      const auto fw = form.apply(w);
      for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * fw[i];
      if (sgn(s) != 0) return false;
    }
  return true;
}

namespace {

void require_nondegenerate(const QMatrix& m, const char* what) {
  if (rank_bareiss(m) != m.rows())
    throw std::invalid_argument(std::string(what) + ": form is degenerate");
}

}  // namespace

BilinearForm kaehler_form(const BilinearForm& g, const ParaComplexOp& I) {
  if (g.kind != FormKind::Symmetric) throw std::invalid_argument("kaehler_form: g must be symmetric");
  require_nondegenerate(g.m, "kaehler_form");
  if (!vanishes_on(g.m, I.plus_basis()) || !vanishes_on(g.m, I.minus_basis()))
    throw std::invalid_argument("kaehler_form: eigenspaces of I are not g-isotropic");
  BilinearForm w(g.m * I.matrix(), FormKind::Antisymmetric);
  require_nondegenerate(w.m, "kaehler_form(output)");
  if (!vanishes_on(w.m, I.plus_basis()) || !vanishes_on(w.m, I.minus_basis()))
    throw std::logic_error("kaehler_form: output does not vanish on the eigenspaces");
  return w;
}

BilinearForm metric_from_symplectic(const BilinearForm& w, const ParaComplexOp& I) {
  if (w.kind != FormKind::Antisymmetric)
    throw std::invalid_argument("metric_from_symplectic: w must be antisymmetric");
  require_nondegenerate(w.m, "metric_from_symplectic");
  if (!vanishes_on(w.m, I.plus_basis()) || !vanishes_on(w.m, I.minus_basis()))
    throw std::invalid_argument("metric_from_symplectic: eigenspaces of I are not Lagrangian");
  // g(v, w) = -omega(I v, w)
  BilinearForm g(-(I.matrix().transpose() * w.m), FormKind::Symmetric);
  require_nondegenerate(g.m, "metric_from_symplectic(output)");
  if (!vanishes_on(g.m, I.plus_basis()) || !vanishes_on(g.m, I.minus_basis()))
    throw std::logic_error("metric_from_symplectic: output eigenspaces not isotropic");
  return g;
}

}  // namespace g2mae::parakahler
