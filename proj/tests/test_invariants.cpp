#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2mae/invariants.hpp"

using namespace g2mae;
using namespace g2mae::invariants;

namespace {

// Membership of f in the span of basis, over Q: appending f must not raise
// the rank.
bool in_span(const QForm& f, const std::vector<QForm>& basis) {
  const long n = binom(f.dim(), f.degree());
  QMatrix m(basis.size() + 1, n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto v = form_to_vector(basis[i]);
    for (long j = 0; j < n; ++j) m.at(i, j) = v[j];
  }
  auto v = form_to_vector(f);
  for (long j = 0; j < n; ++j) m.at(basis.size(), j) = v[j];
  QMatrix top(basis.size(), n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (long j = 0; j < n; ++j) top.at(i, j) = m.at(i, j);
  return rank(m) == rank(top);
}

}  // namespace

TEST_CASE("dimension ladder 2,4,6,9,12") {
  const long expected[5] = {2, 4, 6, 9, 12};
  for (int k = 1; k <= 5; ++k) {
    const auto solved = solved_invariants(k);
    CHECK(static_cast<long>(solved.size()) == expected[k - 1]);
    for (const auto& f : solved) CHECK(is_invariant(f));
  }
  CHECK_THROWS_AS((void)solved_invariants(0), std::domain_error);
  CHECK_THROWS_AS((void)invariant_basis(6), std::domain_error);
}

TEST_CASE("degree 1 invariants are the delta covectors") {
  const auto b = invariant_basis(1);
  REQUIRE(b.size() == 2);
  CHECK(b[0].name == "E_d");
  CHECK(b[1].name == "E_-d");
  CHECK(b[0].form == QForm::covector(10, 4));
  CHECK(b[1].form == QForm::covector(10, 9));
}

TEST_CASE("degree 2: named generators live in the solved space") {
  const auto solved = solved_invariants(2);
  CHECK(in_span(generator("w2+").form, solved));
  CHECK(in_span(generator("w2-").form, solved));
  CHECK(in_span(generator("w2").form, solved));
  CHECK(in_span(wedge(generator("E_d").form, generator("E_-d").form), solved));

  // w2+ is a multiple of E_g1^E_g2 - 3 E_g0^E_g3
  const auto& w2p = generator("w2+").form;
  CHECK(w2p.coeff({1, 2}) == 1);
  CHECK(w2p.coeff({0, 3}) == -3);
  CHECK(w2p.term_count() == 2);

  // the coefficient pattern of w2 is (3,1,1,3): the unique invariant
  // supported on the dual pairs, up to one scalar
  const auto& w2 = generator("w2").form;
  CHECK(w2.coeff({0, 5}) == 3);
  CHECK(w2.coeff({1, 6}) == 1);
  CHECK(w2.coeff({2, 7}) == 1);
  CHECK(w2.coeff({3, 8}) == 3);
  CHECK(w2.term_count() == 4);
}

TEST_CASE("degree 2 named basis matches the solver") {
  const auto named = invariant_basis(2);
  REQUIRE(named.size() == 4);
  CHECK(named[0].name == "E_d^E_-d");
  CHECK(named[1].name == "w2+");
}

TEST_CASE("degree 4: named quartics live in the solved space") {
  const auto solved = solved_invariants(4);
  REQUIRE(solved.size() == 9);
  CHECK(in_span(generator("w4+").form, solved));
  CHECK(in_span(generator("w4-").form, solved));
  CHECK(in_span(generator("w4").form, solved));
  // w4 is the six-term tensor with unit coefficients
  const auto& w4 = generator("w4").form;
  CHECK(w4.term_count() == 6);
  CHECK(w4.coeff({0, 1, 5, 6}) == 1);
  CHECK(w4.coeff({0, 3, 6, 7}) == 1);
  CHECK(w4.coeff({1, 2, 5, 8}) == 1);
  CHECK(w4.coeff({2, 3, 7, 8}) == 1);
}

TEST_CASE("wedge products of generators span degrees 3 and 4") {
  for (int k : {3, 4}) {
    const auto named = invariant_basis(k);  // throws if span/rank checks fail
    CHECK(named.size() == solved_invariants(k).size());
  }
}

TEST_CASE("the twelve five-forms") {
  const auto twelve = twelve_five_forms();
  REQUIRE(twelve.size() == 12);

  // order and names
  CHECK(twelve[0].name == "w2+^w2-^E_d");
  CHECK(twelve[6].name == "w4+^E_d");
  CHECK(twelve[11].name == "w4^E_-d");

  // w4+^E_d is the single wedge monomial dx0^dx1^dx2^dx3^dx4
  CHECK(twelve[6].form == QForm::monomial(10, {0, 1, 2, 3, 4}, Rat(1)));

  // every one is an H_d eigenform with the bookkeeping weight
  CHECK(twelve[0].hdelta_weight == 2);   // 0 + 0 + 2
  CHECK(twelve[1].hdelta_weight == -2);
  CHECK(twelve[6].hdelta_weight == 6);
  CHECK(twelve[9].hdelta_weight == -6);

  // linear independence: 12 forms of rank 12
  const long n = binom(10, 5);
  QMatrix m(12, n);
  for (int i = 0; i < 12; ++i) {
    auto v = form_to_vector(twelve[i].form);
    for (long j = 0; j < n; ++j) m.at(i, j) = v[j];
  }
  CHECK(rank(m) == 12);
}

TEST_CASE("conformal weights") {
  const auto w = conformal_weights();
  CHECK(w.at("E_d") == 2);
  CHECK(w.at("E_-d") == -2);
  CHECK(w.at("w2") == 0);
  CHECK(w.at("w4") == 0);
  CHECK(w.at("w4+") == 4);
  CHECK(w.at("w4-") == -4);
  CHECK(w.at("w2+^w2-^E_d") == 2);
}

TEST_CASE("H_a1 invariance follows for every named form") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& nf : invariant_basis(k)) CHECK(is_invariant(nf.form));
}
