#include "g2mae/polyu.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2mae {

int uvar_id(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j > 4) throw std::domain_error("uvar_id: index out of range");
  // Offsets of the rows of the upper triangle: 0,5,9,12,14.
  static const int off[5] = {0, 5, 9, 12, 14};
  return off[i] + (j - i);
}

std::pair<int, int> uvar_of(int id) {
  static const int off[5] = {0, 5, 9, 12, 14};
  for (int i = 4; i >= 0; --i)
    if (id >= off[i]) return {i, i + (id - off[i])};
  throw std::domain_error("uvar_of: bad id");
}

std::string uvar_name(int id) {
  auto [i, j] = uvar_of(id);
  return "u" + std::to_string(i) + std::to_string(j);
}

PolyU::PolyU(Rat c) {
  if (sgn(c) != 0) terms_.emplace(UMonomial{}, std::move(c));
}

PolyU PolyU::var(int i, int j) {
  PolyU p;
  p.terms_.emplace(UMonomial{static_cast<std::uint8_t>(uvar_id(i, j))}, Rat(1));
  return p;
}

bool PolyU::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

int PolyU::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.size());
}

void PolyU::add_term(UMonomial m, Rat c) {
  if (sgn(c) == 0) return;
  std::sort(m.begin(), m.end());
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

PolyU PolyU::operator+(const PolyU& o) const {
  PolyU r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

PolyU PolyU::operator-(const PolyU& o) const {
  PolyU r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

PolyU PolyU::operator*(const PolyU& o) const {
  PolyU r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      UMonomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      r.add_term(std::move(m), c1 * c2);
    }
  return r;
}

PolyU PolyU::scaled(const Rat& c) const {
  PolyU r;
  if (sgn(c) == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

PolyU operator*(const Rat& c, const PolyU& p) { return p.scaled(c); }

PolyU PolyU::derivative(int var_id) const {
  PolyU r;
  const auto v = static_cast<std::uint8_t>(var_id);
  for (const auto& [m, c] : terms_) {
    long mult = std::count(m.begin(), m.end(), v);
    if (mult == 0) continue;
    UMonomial dm = m;
    dm.erase(std::find(dm.begin(), dm.end(), v));
    r.add_term(std::move(dm), c * Rat(mult));
  }
  return r;
}

int PolyU::degree_in(int var_id) const {
  const auto v = static_cast<std::uint8_t>(var_id);
  long best = 0;
  for (const auto& [m, c] : terms_) best = std::max<long>(best, std::count(m.begin(), m.end(), v));
  return static_cast<int>(best);
}

Rat PolyU::evaluate(const std::array<Rat, 15>& point) const {
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (auto v : m) t *= point[v];
    total += t;
  }
  return total;
}

PolyU PolyU::normalized() const {
  if (terms_.empty()) return PolyU();
  std::vector<Rat> coeffs;
  coeffs.reserve(terms_.size());
  for (const auto& [m, c] : terms_) coeffs.push_back(c);
  mpz_class l = 1, g = 0;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  for (auto& c : coeffs) c *= Rat(l);
  for (const auto& c : coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  Rat scale = Rat(l) / Rat(g);
  if (sgn(terms_.rbegin()->second) < 0) scale = -scale;
  return scaled(scale);
}

bool PolyU::proportional_to(const PolyU& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return normalized() == o.normalized();
}

std::string PolyU::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Largest terms first reads naturally for hand checking.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c;
    if (out.empty()) {
      if (sgn(a) < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += sgn(a) < 0 ? " - " : " + ";
      if (sgn(a) < 0) a = -a;
    }
    std::string mono;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += uvar_name(m[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    if (mono.empty()) {
      out += rat_str(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += rat_str(a) + "*" + mono;
    }
  }
  return out;
}

}  // namespace g2mae
