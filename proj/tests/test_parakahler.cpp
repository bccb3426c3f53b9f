#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2mae/g2rep.hpp"
#include "g2mae/parakahler.hpp"

using namespace g2mae;
using namespace g2mae::parakahler;

namespace {

QMatrix antidiag2() {
  QMatrix g(2, 2);
  g.at(0, 1) = 1;
  g.at(1, 0) = 1;
  return g;
}

QMatrix diag_pm(std::size_t n) {
  QMatrix i(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    i.at(k, k) = 1;
    i.at(n + k, n + k) = -1;
  }
  return i;
}

QMatrix random_invertible(RatSampler& rs, std::size_t n) {
  for (;;) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rs.next();
    if (sgn(det(m)) != 0) return m;
  }
}

// I = P diag(1^n, -1^n) P^{-1}; omega from a block antidiagonal seed
// transported to the same basis, so the eigenspaces are Lagrangian by
// construction.
std::pair<ParaComplexOp, BilinearForm> random_pair(RatSampler& rs, std::size_t n) {
  const QMatrix p = random_invertible(rs, 2 * n);
  const QMatrix pinv = inverse(p);
  const QMatrix i = p * diag_pm(n) * pinv;

  QMatrix b(n, n);
  for (;;) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) b.at(r, c) = rs.next();
    if (rank_bareiss(b) == n) break;
  }
  QMatrix om_eig(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      om_eig.at(r, n + c) = b.at(r, c);
      om_eig.at(n + c, r) = -b.at(r, c);
    }
  const QMatrix om = pinv.transpose() * om_eig * pinv;
  return {ParaComplexOp(i), BilinearForm(om, FormKind::Antisymmetric)};
}

}  // namespace

TEST_CASE("2x2 pinned example") {
  const ParaComplexOp I(QMatrix::diagonal({Rat(1), Rat(-1)}));
  const BilinearForm g(antidiag2(), FormKind::Symmetric);
  const BilinearForm w = kaehler_form(g, I);
  CHECK(w.m.at(0, 0) == 0);
  CHECK(w.m.at(0, 1) == -1);
  CHECK(w.m.at(1, 0) == 1);
  CHECK(w.m.at(1, 1) == 0);

  // standard omega back to the antidiagonal metric
  QMatrix om(2, 2);
  om.at(0, 1) = -1;
  om.at(1, 0) = 1;
  const BilinearForm g2 = metric_from_symplectic(BilinearForm(om, FormKind::Antisymmetric), I);
  CHECK(g2.m == antidiag2());

  // round trip
  CHECK(kaehler_form(g2, I).m == om);
}

TEST_CASE("invariant breaches are rejected") {
  CHECK_THROWS_AS(ParaComplexOp{QMatrix::identity(2)}, std::invalid_argument);  // trace != 0
  QMatrix notinv(2, 2);
  notinv.at(0, 1) = 1;
  CHECK_THROWS_AS(ParaComplexOp{notinv}, std::invalid_argument);  // I^2 != id

  // eigenspaces not isotropic: euclidean metric with diag(1,-1)
  const ParaComplexOp I(QMatrix::diagonal({Rat(1), Rat(-1)}));
  CHECK_THROWS_AS((void)kaehler_form(BilinearForm(QMatrix::identity(2), FormKind::Symmetric), I),
                  std::invalid_argument);
}

TEST_CASE("pairing from g2rep with the block involution") {
  const QMatrix omz = g2rep::pairing_matrix();
  const ParaComplexOp I(diag_pm(5));
  const BilinearForm g = metric_from_symplectic(BilinearForm(omz, FormKind::Antisymmetric), I);

  // oracle: the matrix product of Omega_Z with the involution (the two
  // composition orders differ by the overall sign), symmetric and
  // nondegenerate, vanishing on each 5-dimensional block
  CHECK(g.m == -(I.matrix().transpose() * omz));
  CHECK(g.m == omz * I.matrix());
  CHECK(g.m.is_symmetric());
  CHECK(rank_bareiss(g.m) == 10);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CHECK(sgn(g.m.at(i, j)) == 0);
      CHECK(sgn(g.m.at(5 + i, 5 + j)) == 0);
    }
}

TEST_CASE("metric and symplectic round trips on random inputs") {
  RatSampler rs(101);
  int done = 0;
  while (done < 200) {
    const std::size_t n = static_cast<std::size_t>(rs.next_int(1, 3));
    auto [I, om] = random_pair(rs, n);
    const BilinearForm g = metric_from_symplectic(om, I);
    CHECK(g.m.is_symmetric());
    CHECK(vanishes_on(g.m, I.plus_basis()));
    CHECK(vanishes_on(g.m, I.minus_basis()));

    const BilinearForm om2 = kaehler_form(g, I);
    CHECK(om2.m == om.m);

    // para-Hermitian sign rule: omega(Iv, Iw) = -omega(v, w)
    CHECK(I.matrix().transpose() * om.m * I.matrix() == -om.m);
    ++done;
  }
}
