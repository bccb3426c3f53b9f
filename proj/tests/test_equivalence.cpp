#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "g2mae/equivalence.hpp"

using namespace g2mae;
using namespace g2mae::equivalence;
using g2mae::mae::catalogue;
using g2mae::mae::entry;

TEST_CASE("tau: square, symplectic certificate, substitution rule") {
  const QMatrix t = tau();
  CHECK(t * t == -QMatrix::identity(10));
  CHECK(is_symplectic(t));

  // termwise substitution oracle: dx0^dx1^dx2^dx3^du4 -> -(du0^du1^du2^du3^dx4)
  const QForm src = QForm::monomial(10, {0, 1, 2, 3, 9}, Rat(1));
  const QForm img = pullback(t, src);
  REQUIRE(img.term_count() == 1);
  CHECK(img.coeff({4, 5, 6, 7, 8}) == -1);
}

TEST_CASE("xi: fixes the first eight covectors, rotates the (dx4, du4) plane") {
  const QMatrix x = xi();
  CHECK(is_symplectic(x));
  // fixes dx1
  CHECK(pullback(x, QForm::covector(10, 1)) == QForm::covector(10, 1));
  // xi^2 = -id on the (4,9) plane, +id elsewhere
  const QMatrix x2 = x * x;
  CHECK(x2.at(4, 4) == -1);
  CHECK(x2.at(9, 9) == -1);
  for (int i = 0; i < 10; ++i)
    if (i != 4 && i != 9) CHECK(x2.at(i, i) == 1);

  // pullback(xi, L1 form) is proportional to the Q2 form
  const auto img = act_on_equation(x, entry("L1"));
  CHECK(img.poly.proportional_to(entry("Q2").poly));
}

TEST_CASE("tau orbit identities on the catalogue") {
  const QMatrix t = tau();

  // tau on L2 (u44) gives the M^4_4 entry
  CHECK(act_on_equation(t, entry("L2")).poly.proportional_to(catalogue()[8].poly));
  // tau on the Q1 member with E_d gives its E_-d sibling
  CHECK(act_on_equation(t, catalogue()[0]).poly.proportional_to(catalogue()[1].poly));
  // identity map changes nothing
  CHECK(act_on_equation(QMatrix::identity(10), entry("Q1")).poly == entry("Q1").poly);
}

TEST_CASE("both action routes agree on all twelve entries") {
  // pullback-then-restrict must land on a scalar multiple of some catalogue
  // polynomial, for both generators
  for (const QMatrix& s : {tau(), xi()})
    for (const auto& e : catalogue()) {
      const auto img = act_on_equation(s, e);
      bool found = false;
      for (const auto& other : catalogue())
        if (img.poly.proportional_to(other.poly)) {
          found = true;
          break;
        }
      CHECK(found);
    }
}

TEST_CASE("classification: tau alone gives six nontrivial classes") {
  const auto p = classify(catalogue(), {tau()});
  CHECK(p.nontrivial_count == 6);
  const std::vector<std::string> want = {"Q1", "L1", "Q2", "D", "L2", "Q3"};
  CHECK(p.representatives == want);

  // expected pairing of entries
  auto cls_of = [&](int i) {
    for (std::size_t c = 0; c < p.classes.size(); ++c)
      if (std::find(p.classes[c].begin(), p.classes[c].end(), i) != p.classes[c].end())
        return static_cast<int>(c);
    return -1;
  };
  CHECK(cls_of(0) == cls_of(1));
  CHECK(cls_of(2) == cls_of(5));
  CHECK(cls_of(3) == cls_of(4));
  CHECK(cls_of(6) == cls_of(9));
  CHECK(cls_of(7) == cls_of(8));
  CHECK(cls_of(10) == cls_of(11));
  CHECK(cls_of(0) != cls_of(2));
}

TEST_CASE("classification: tau and xi reduce to Q1, L1, L2, Q3") {
  const auto p = classify(catalogue(), {tau(), xi()});
  CHECK(p.nontrivial_count == 4);
  const std::vector<std::string> want = {"Q1", "L1", "L2", "Q3"};
  CHECK(p.representatives == want);
}

TEST_CASE("classification: no generators") {
  const auto p = classify(catalogue(), {});
  // 11 nontrivial singletons plus the trivial constant entry
  CHECK(p.nontrivial_count == 11);
  CHECK(p.classes.size() == 12);
}

TEST_CASE("symbol: L1 is constant of rank 4") {
  const auto& l1 = entry("L1");
  std::array<Rat, 15> pt{};
  const auto s0 = symbol(l1.poly, pt);
  CHECK(s0.rank == 4);
  // constant: the same matrix at a random point
  RatSampler rs(5);
  std::array<Rat, 15> pt2;
  for (auto& v : pt2) v = rs.next();
  CHECK(symbol(l1.poly, pt2).m == s0.m);
  // symmetrized gradient of c*(u03 + u12): s_03 = s_12 = c/2 != 0
  CHECK(s0.m.at(0, 3) == s0.m.at(1, 2));
  CHECK(sgn(s0.m.at(0, 3)) != 0);
  const auto bare = symbol(PolyU::var(0, 3) + PolyU::var(1, 2), pt);
  CHECK(bare.m.at(0, 3) == rat(1, 2));
  CHECK(bare.rank == 4);
}

TEST_CASE("symbol: Q1 at the origin is zero, generic chart points have rank 4") {
  const auto& q1 = entry("Q1");
  std::array<Rat, 15> origin{};
  CHECK(q1.poly.evaluate(origin) == 0);  // the origin lies on {Q1 = 0}
  CHECK(symbol(q1.poly, origin).rank == 0);

  RatSampler rs(9);
  int full = 0, total = 0;
  for (int k = 0; k < 50; ++k) {
    auto pt = sample_on_hypersurface(q1.poly, rs);
    REQUIRE(pt.has_value());
    CHECK(q1.poly.evaluate(*pt) == 0);
    ++total;
    if (symbol(q1.poly, *pt).rank == 4) ++full;
  }
  CHECK(full >= total - 2);
}

TEST_CASE("Euler identity for the quadratic entries") {
  for (const char* name : {"Q1", "Q3"}) {
    const PolyU& f = entry(name).poly;
    PolyU euler;
    for (int v = 0; v < kNumUVars; ++v) {
      auto [i, j] = uvar_of(v);
      euler = euler + PolyU::var(i, j) * f.derivative(v);
    }
    CHECK(euler == Rat(2) * f);
  }
}

TEST_CASE("separation verdicts") {
  const auto sep = separate(entry("Q1"), entry("L1"), 0);
  CHECK(sep.verdict == "separated");
  CHECK(sep.ranks[1] == std::set<std::size_t>{4});
  CHECK(sep.ranks[0].count(0) == 1);
  CHECK(sep.ranks[0].count(4) == 1);
  REQUIRE(sep.witness.has_value());
  CHECK(entry("Q1").poly.evaluate(*sep.witness) == 0);

  CHECK(separate(entry("L1"), entry("L1"), 0).verdict == "inconclusive");
  CHECK(separate(entry("L2"), entry("D"), 0).verdict == "inconclusive");
}

TEST_CASE("conjugation identity for block-diagonal symplectomorphisms") {
  RatSampler rs(55);
  const QMatrix t = tau();
  for (int it = 0; it < 20; ++it) {
    QMatrix a(5, 5);
    do {
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) a.at(i, j) = rs.next();
    } while (sgn(det(a)) == 0);
    const QMatrix ainvt = inverse(a).transpose();

    QMatrix g(10, 10), gbar(10, 10);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        g.at(i, j) = a.at(i, j);
        g.at(5 + i, 5 + j) = ainvt.at(i, j);
        gbar.at(i, j) = ainvt.at(i, j);
        gbar.at(5 + i, 5 + j) = a.at(i, j);
      }
    CHECK(is_symplectic(g));
    CHECK(g * t == t * gbar);
  }
}
