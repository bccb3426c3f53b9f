#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2mae/rational.hpp"

namespace g2mae {

/// The 15 symmetric Hessian variables u_ij, 0 <= i <= j <= 4, indexed 0..14
/// row-major over the upper triangle. u_ji is always rewritten to u_ij.
constexpr int kNumUVars = 15;

int uvar_id(int i, int j);
std::pair<int, int> uvar_of(int id);
std::string uvar_name(int id);  // "u03"

/// Monomial = sorted variable ids with multiplicity.
using UMonomial = std::vector<std::uint8_t>;

/// Graded-lex order on monomials: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const UMonomial& a, const UMonomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Sparse polynomial over Q in the u_ij; no zero coefficients stored.
class PolyU {
 public:
  PolyU() = default;
  explicit PolyU(Rat c);
  explicit PolyU(long c) : PolyU(Rat(c)) {}

  static PolyU var(int i, int j);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;  // total degree; -1 for the zero polynomial
  const std::map<UMonomial, Rat, GrlexLess>& terms() const { return terms_; }

  void add_term(UMonomial m, Rat c);

  PolyU operator+(const PolyU& o) const;
  PolyU operator-(const PolyU& o) const;
  PolyU operator*(const PolyU& o) const;
  PolyU scaled(const Rat& c) const;
  bool operator==(const PolyU& o) const { return terms_ == o.terms_; }
  bool operator!=(const PolyU& o) const { return !(*this == o); }

  /// d/du_v with the upper-triangle variables treated as independent.
  PolyU derivative(int var_id) const;

  /// Degree in one variable.
  int degree_in(int var_id) const;

  Rat evaluate(const std::array<Rat, 15>& point) const;

  /// Content 1, positive leading (grlex-largest) coefficient; canonical
  /// representative of the ray { c*p : c > 0 } after integer scaling.
  PolyU normalized() const;

  /// Equal up to a single nonzero rational scalar.
  bool proportional_to(const PolyU& o) const;

  std::string to_string() const;

 private:
  std::map<UMonomial, Rat, GrlexLess> terms_;
};

PolyU operator*(const Rat& c, const PolyU& p);

}  // namespace g2mae
