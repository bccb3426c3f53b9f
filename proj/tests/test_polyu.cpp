#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2mae/polyu.hpp"

using namespace g2mae;

TEST_CASE("variable canonicalization u_ji -> u_ij") {
  CHECK(uvar_id(3, 1) == uvar_id(1, 3));
  CHECK(uvar_name(uvar_id(0, 3)) == "u03");
  CHECK(uvar_name(uvar_id(4, 4)) == "u44");
  CHECK(PolyU::var(2, 0) == PolyU::var(0, 2));
  CHECK_THROWS_AS((void)uvar_id(0, 5), std::domain_error);
}

TEST_CASE("ring operations") {
  const PolyU a = PolyU::var(0, 1);
  const PolyU b = PolyU::var(2, 3);
  const PolyU p = a * b + Rat(2) * (a * a) - PolyU(Rat(5));
  CHECK(p.degree() == 2);
  CHECK_FALSE(p.is_constant());
  CHECK((p - p).is_zero());
  CHECK(PolyU(Rat(0)).is_zero());
  CHECK(PolyU(Rat(3)).is_constant());
  CHECK((a * b) == (b * a));
  CHECK(((a + b) * (a - b)) == (a * a - b * b));
}

TEST_CASE("derivative treats upper-triangle variables independently") {
  const PolyU a = PolyU::var(0, 1);
  const PolyU f = Rat(3) * (a * a) + PolyU::var(0, 0) * PolyU::var(1, 1);
  CHECK(f.derivative(uvar_id(0, 1)) == Rat(6) * a);
  CHECK(f.derivative(uvar_id(0, 0)) == PolyU::var(1, 1));
  CHECK(f.derivative(uvar_id(2, 2)).is_zero());
  CHECK(f.degree_in(uvar_id(0, 1)) == 2);
  CHECK(f.degree_in(uvar_id(0, 0)) == 1);
}

TEST_CASE("evaluation") {
  std::array<Rat, 15> pt{};
  pt[uvar_id(0, 1)] = rat(1, 2);
  pt[uvar_id(2, 3)] = rat(-3);
  const PolyU f = PolyU::var(0, 1) * PolyU::var(2, 3) + PolyU(Rat(1));
  CHECK(f.evaluate(pt) == rat(-1, 2));
}

TEST_CASE("normalization and proportionality") {
  const PolyU f = Rat(2) * PolyU::var(0, 1) - Rat(4) * PolyU::var(2, 2);
  const PolyU g = rat(-1, 3) * PolyU::var(0, 1) + rat(2, 3) * PolyU::var(2, 2);
  CHECK(f.proportional_to(g));
  CHECK(f.normalized() == g.normalized());
  CHECK_FALSE(f.proportional_to(f + PolyU(Rat(1))));
  CHECK(PolyU().proportional_to(PolyU()));
  CHECK_FALSE(PolyU().proportional_to(f));

  // normalized: integer coefficients, content 1, positive leading term
  const PolyU n = f.normalized();
  for (const auto& [m, c] : n.terms()) CHECK(c.get_den() == 1);
  CHECK(sgn(n.terms().rbegin()->second) > 0);
}

TEST_CASE("to_string renders grlex-descending") {
  const PolyU f = PolyU::var(0, 3) + PolyU::var(1, 2) * PolyU::var(1, 2);
  CHECK(f.to_string() == "u12^2 + u03");
  CHECK(PolyU().to_string() == "0");
}
