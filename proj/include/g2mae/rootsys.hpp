#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "g2mae/qmatrix.hpp"
#include "g2mae/rational.hpp"

namespace g2mae::rootsys {

/// A root as an integer coefficient vector over the simple roots a1..al.
/// Roots stored in a RootSystem have all coefficients >= 0 or all <= 0.
struct Root {
  std::vector<long> coeffs;

  Root() = default;
  explicit Root(std::vector<long> c) : coeffs(std::move(c)) {}

  bool is_zero() const;
  bool is_nonnegative() const;
  Root negated() const;
  bool operator==(const Root& o) const { return coeffs == o.coeffs; }
  bool operator<(const Root& o) const { return coeffs < o.coeffs; }

  /// "3a1+2a2", "a1", "-a1-a2"; zero coefficients are omitted.
  std::string to_string() const;
};

/// Rank, Gram matrix of simple-root inner products, and the positive roots
/// in a fixed order. Construction validates the invariants: symmetric Gram
/// with positive diagonal, Cartan integers 2(ai,aj)/(aj,aj) equal to 2 on
/// the diagonal and nonpositive integers off it, sign-pure stored roots.
class RootSystem {
 public:
  RootSystem(int rank, QMatrix gram, std::vector<Root> positive_roots);

  int rank() const { return rank_; }
  const QMatrix& gram() const { return gram_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::vector<Root> all_roots() const;

  Rat inner(const Root& a, const Root& b) const;
  bool contains(const Root& a) const;
  Root simple(int i) const;  // 1-based

 private:
  int rank_;
  QMatrix gram_;
  std::vector<Root> positive_;
};

/// The G2 system over Pi = {a1, a2} with Gram derived from the epsilon
/// relations: (a1,a1) = 2/3, (a2,a2) = 2, (a1,a2) = -1. The conventional value
/// "(a1,a2) = 1" contradicts those relations and is treated as a sign typo.
/// Positive roots in the fixed order a1, a2, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2;
/// the maximal root is delta = 3a1+2a2.
RootSystem build_g2();

Root g2_delta();
Root g2_gamma(int i);  // gamma_i = a2 + i*a1, i = 0..3

/// d(sum k_i a_i) = sum over pi1 of k_i; pi1 holds 1-based simple-root
/// indices. Throws std::domain_error if alpha is not a root of rs.
long grading_function(const RootSystem& rs, const std::set<int>& pi1, const Root& alpha);

struct Gradation {
  std::set<int> pi1;
  std::map<long, std::vector<Root>> level_sets;  // over R = R+ u R-
  long depth = 0;
};

/// One gradation per nonempty subset of the simple roots.
std::vector<Gradation> enumerate_gradations(const RootSystem& rs);

/// Graded dimension table of the flag gradation of sl(V) determined by an
/// ordered decomposition dim V = d1 + ... + dk: block degree of a matrix
/// unit E_ab is block(a) - block(b). Construction verifies bracket closure
/// [g^i, g^j] in g^{i+j} on all pairs of matrix units.
struct FlagGradation {
  std::vector<int> dims;          // the input composition
  std::map<int, long> dim_table;  // i -> dim g^i, i = -(k-1)..k-1
  long checked_pairs = 0;         // matrix-unit pairs verified
};

FlagGradation sl_flag_gradation(const std::vector<int>& dims);

}  // namespace g2mae::rootsys
