#include "g2mae/g2rep.hpp"

#include <stdexcept>

namespace g2mae::g2rep {

const std::array<MLabel, 10>& mbasis() {
  static const std::array<MLabel, 10> basis = [] {
    std::array<MLabel, 10> b;
    for (int i = 0; i < 4; ++i) b[i] = {"E_g" + std::to_string(i), rootsys::g2_gamma(i), 1};
    b[4] = {"E_d", rootsys::g2_delta(), 2};
    for (int i = 0; i < 4; ++i)
      b[5 + i] = {"E_-g" + std::to_string(i), rootsys::g2_gamma(i).negated(), -1};
    b[9] = {"E_-d", rootsys::g2_delta().negated(), -2};
    return b;
  }();
  return basis;
}

int dual_index(int i) { return i < 5 ? i + 5 : i - 5; }

OpName op_from_string(const std::string& s) {
  if (s == "H_d") return OpName::Hdelta;
  if (s == "H_a1") return OpName::Halpha1;
  if (s == "E_a1") return OpName::Ealpha1;
  if (s == "E_-a1") return OpName::Eminusalpha1;
  throw std::domain_error("unknown operator '" + s + "' (expected H_d, H_a1, E_a1, E_-a1)");
}

std::string op_name(OpName n) {
  switch (n) {
    case OpName::Hdelta: return "H_d";
    case OpName::Halpha1: return "H_a1";
    case OpName::Ealpha1: return "E_a1";
    case OpName::Eminusalpha1: return "E_-a1";
  }
  throw std::domain_error("op_name: bad enum");
}

QMatrix ad_operator(OpName name) {
  QMatrix m(10, 10);
  switch (name) {
    case OpName::Hdelta: {
      for (int i = 0; i < 10; ++i) m.at(i, i) = mbasis()[i].adz_degree;
      break;
    }
    case OpName::Halpha1: {
      // 3(a1, b) on E_b; for gi this is -3 + 2i, zero on E_{+-d}.
      const auto rs = rootsys::build_g2();
      const auto a1 = rs.simple(1);
      for (int i = 0; i < 10; ++i) m.at(i, i) = 3 * rs.inner(a1, mbasis()[i].root);
      break;
    }
    case OpName::Ealpha1: {
      // E_gi -> N E_{gi+1}, E_{-gi} -> N E_{-g(i-1)}
      const long Nup[4] = {1, 2, 3, 0};
      const long Ndn[4] = {0, -3, -2, -1};
      for (int i = 0; i < 3; ++i) m.at(i + 1, i) = Nup[i];
      for (int i = 1; i < 4; ++i) m.at(5 + i - 1, 5 + i) = Ndn[i];
      break;
    }
    case OpName::Eminusalpha1: {
      // E_gi -> N E_{g(i-1)}, E_{-gi} -> N E_{-g(i+1)}
      const long Nup[4] = {0, 3, 2, 1};
      const long Ndn[4] = {-1, -2, -3, 0};
      for (int i = 1; i < 4; ++i) m.at(i - 1, i) = Nup[i];
      for (int i = 0; i < 3; ++i) m.at(5 + i + 1, 5 + i) = Ndn[i];
      break;
    }
  }
  return m;
}

QMatrix pairing_matrix() {
  QMatrix m(10, 10);
  const Rat w[5] = {rat(1, 3), rat(1), rat(1), rat(1, 3), rat(2)};
  for (int i = 0; i < 5; ++i) {
    m.at(i, 5 + i) = w[i];
    m.at(5 + i, i) = -w[i];
  }
  return m;
}

Rat pairing(int i, int j) {
  if (i < 0 || i > 9 || j < 0 || j > 9) throw std::domain_error("pairing: index out of range");
  return pairing_matrix().at(i, j);
}

Rat weight_of(const std::vector<Rat>& v, const QMatrix& H) {
  if (v.size() != H.cols()) throw std::domain_error("weight_of: length mismatch");
  std::vector<Rat> hv = H.apply(v);
  bool found = false;
  Rat lambda = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Rat r = hv[i] / v[i];
    if (!found) {
      lambda = r;
      found = true;
    } else if (r != lambda) {
      throw std::domain_error("weight_of: not an eigenvector");
    }
  }
  if (!found) throw std::domain_error("weight_of: zero vector");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) == 0 && sgn(hv[i]) != 0)
      throw std::domain_error("weight_of: not an eigenvector");
  return lambda;
}

}  // namespace g2mae::g2rep
