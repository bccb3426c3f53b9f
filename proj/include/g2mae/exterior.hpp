#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "g2mae/qmatrix.hpp"
#include "g2mae/rational.hpp"

namespace g2mae {

/// Strictly increasing basis indices; length = form degree.
using MultiIndex = std::vector<int>;

/// All k-element subsets of {0..dim-1} in lexicographic order.
std::vector<MultiIndex> multi_indices(int dim, int k);

long binom(int n, int k);

/// Lexicographic rank of a multi-index among the k-subsets of {0..dim-1}.
long multi_index_rank(const MultiIndex& mi, int dim);

/// Sorts indices in place and returns the permutation sign, or 0 on a repeat.
int sort_with_sign(MultiIndex& mi);

/// Alternating tensor of fixed degree over an ordered basis, coefficients in
/// any commutative ring with exact equality (Rat or PolyU). Zero coefficients
/// are never stored.
template <class Coeff>
class Form {
 public:
  Form() = default;
  Form(int dim, int degree) : dim_(dim), degree_(degree) {
    if (degree < 0 || degree > dim) throw std::domain_error("Form: bad degree");
  }

  static Form covector(int dim, int idx) {
    Form f(dim, 1);
    f.add_term({idx}, Coeff(1));
    return f;
  }

  static Form monomial(int dim, MultiIndex mi, Coeff c) {
    Form f(dim, static_cast<int>(mi.size()));
    f.add_term(std::move(mi), std::move(c));
    return f;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<MultiIndex, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds c * e_mi; mi may be unsorted (the shuffle sign is applied),
  /// repeated indices contribute nothing.
  void add_term(MultiIndex mi, Coeff c) {
    if (static_cast<int>(mi.size()) != degree_) throw std::domain_error("Form: degree mismatch");
    for (int i : mi)
      if (i < 0 || i >= dim_) throw std::domain_error("Form: index out of range");
    const int sign = sort_with_sign(mi);
    if (sign == 0) return;
    if (sign < 0) c = Coeff(0) - c;
    auto it = terms_.find(mi);
    if (it == terms_.end()) {
      if (!(c == Coeff(0))) terms_.emplace(std::move(mi), std::move(c));
    } else {
      it->second = it->second + c;
      if (it->second == Coeff(0)) terms_.erase(it);
    }
  }

  Coeff coeff(const MultiIndex& mi) const {
    auto it = terms_.find(mi);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Form operator+(const Form& o) const {
    check_compatible(o);
    Form r = *this;
    for (const auto& [mi, c] : o.terms_) r.add_term(mi, c);
    return r;
  }

  Form operator-(const Form& o) const {
    check_compatible(o);
    Form r = *this;
    for (const auto& [mi, c] : o.terms_) r.add_term(mi, Coeff(0) - c);
    return r;
  }

  Form scaled(const Coeff& c) const {
    Form r(dim_, degree_);
    if (c == Coeff(0)) return r;
    for (const auto& [mi, v] : terms_) r.terms_.emplace(mi, v * c);
    return r;
  }

  bool operator==(const Form& o) const {
    return dim_ == o.dim_ && degree_ == o.degree_ && terms_ == o.terms_;
  }
  bool operator!=(const Form& o) const { return !(*this == o); }

 private:
  void check_compatible(const Form& o) const {
    if (dim_ != o.dim_ || degree_ != o.degree_)
      throw std::domain_error("Form: incompatible dimensions/degrees");
  }

  int dim_ = 0;
  int degree_ = 0;
  std::map<MultiIndex, Coeff> terms_;
};

/// Shuffle-signed product. Degrees beyond dim collapse to the zero form.
template <class Coeff>
Form<Coeff> wedge(const Form<Coeff>& a, const Form<Coeff>& b) {
  if (a.dim() != b.dim()) throw std::domain_error("wedge: ambient dimension mismatch");
  const int deg = a.degree() + b.degree();
  if (deg > a.dim()) return Form<Coeff>(a.dim(), a.dim());  // zero form of top degree
  Form<Coeff> r(a.dim(), deg);
  for (const auto& [mi, c] : a.terms())
    for (const auto& [mj, d] : b.terms()) {
      MultiIndex m = mi;
      m.insert(m.end(), mj.begin(), mj.end());
      r.add_term(std::move(m), c * d);
    }
  return r;
}

using QForm = Form<Rat>;

/// Leibniz extension of the linear map X (column j = image of basis vector j):
/// X.(v1^...^vk) = sum_i v1^...^(X vi)^...^vk.
QForm derivation_extend(const QMatrix& X, const QForm& om);

/// Multiplicative extension: basis covector j is replaced by the 1-form
/// stored in column j of S. Throws std::domain_error if S is singular.
QForm pullback(const QMatrix& S, const QForm& om);

/// Basis of { w in Lambda^k : derivation_extend(X, w) = 0 for all X in ops },
/// the kernel of the stacked linear system over Q, in reduced echelon normal
/// form with primitive integer leading data.
std::vector<QForm> joint_invariants(const std::vector<QMatrix>& ops, int degree, int dim,
                                    ExecPolicy pol = ExecPolicy::Auto);

/// The matrix of derivation_extend(X, .) on the lex-ordered wedge basis.
QMatrix derivation_matrix(const QMatrix& X, int degree, int dim,
                          ExecPolicy pol = ExecPolicy::Auto);

/// Components of the given forms whose total weight under the diagonal matrix
/// H equals `weight`; zero projections are dropped. H must be diagonal.
std::vector<QForm> eigen_filter(const QMatrix& H, const Rat& weight,
                                const std::vector<QForm>& forms);

/// Total H-weight of a single wedge monomial (H diagonal).
Rat monomial_weight(const QMatrix& H, const MultiIndex& mi);

std::vector<Rat> form_to_vector(const QForm& f);
QForm vector_to_form(const std::vector<Rat>& v, int dim, int degree);

}  // namespace g2mae
