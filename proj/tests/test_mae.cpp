#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "g2mae/mae.hpp"

using namespace g2mae;
using namespace g2mae::mae;

namespace {

// Independent determinant oracle: signed permutation sum over the symbolic
// symmetric matrix with the given rows/columns kept.
PolyU perm_det(const std::vector<int>& rows, const std::vector<int>& cols) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  PolyU out;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    PolyU term(Rat(inversions % 2 == 0 ? 1 : -1));
    for (int i = 0; i < n; ++i) term = term * PolyU::var(rows[i], cols[perm[i]]);
    out = out + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<int> complement(const std::vector<int>& removed) {
  std::vector<int> keep;
  for (int i = 0; i < 5; ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) keep.push_back(i);
  return keep;
}

QForm dxdu_monomial(std::initializer_list<int> idx, long c = 1) {
  return QForm::monomial(10, MultiIndex(idx), Rat(c));
}

}  // namespace

TEST_CASE("minors against the permutation-determinant oracle") {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
      {{1, 2, 4}, {1, 2, 4}}, {{1, 2, 4}, {0, 3, 4}}, {{0, 3, 4}, {0, 3, 4}},
      {{0, 1, 2}, {1, 2, 3}}, {{0, 1, 3}, {0, 2, 3}}, {{0, 4}, {3, 4}},
      {{0}, {3}},             {{4}, {4}},             {{}, {}},
      {{0, 1, 4}, {2, 3, 4}}, {{0, 2, 4}, {1, 3, 4}}};
  for (const auto& [rows_rm, cols_rm] : cases)
    CHECK(minor_poly(rows_rm, cols_rm) == perm_det(complement(rows_rm), complement(cols_rm)));
}

TEST_CASE("pinned small minors") {
  // remove rows/cols 1,2,4 -> u00 u33 - u03^2
  CHECK(minor_poly({1, 2, 4}, {1, 2, 4}) ==
        PolyU::var(0, 0) * PolyU::var(3, 3) - PolyU::var(0, 3) * PolyU::var(0, 3));
  // rows {0,3} x cols {1,2} -> u01 u23 - u02 u13
  CHECK(minor_poly({1, 2, 4}, {0, 3, 4}) ==
        PolyU::var(0, 1) * PolyU::var(2, 3) - PolyU::var(0, 2) * PolyU::var(1, 3));
  // M^4_4 at u = identity is 1
  std::array<Rat, 15> id{};
  for (int i = 0; i < 5; ++i) id[uvar_id(i, i)] = 1;
  CHECK(minor_poly({4}, {4}).evaluate(id) == 1);

  CHECK_THROWS_AS((void)minor_poly({0, 1}, {0}), std::domain_error);
  CHECK_THROWS_AS((void)minor_poly({5}, {0}), std::domain_error);
}

TEST_CASE("transpose symmetry of minors, all table pairs") {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> used = {
      {{1, 2, 4}, {0, 3, 4}}, {{1, 2}, {0, 3}},       {{0, 1, 2}, {1, 2, 3}},
      {{0, 1, 3}, {0, 2, 3}}, {{0, 4}, {3, 4}},       {{1, 4}, {2, 4}},
      {{0}, {3}},             {{1}, {2}},             {{4}, {4}},
      {{0, 1, 4}, {2, 3, 4}}, {{0, 2, 4}, {1, 3, 4}}, {{0, 1}, {2, 3}},
      {{0, 2}, {1, 3}},       {{0, 3, 4}, {0, 3, 4}}, {{1, 2, 4}, {1, 2, 4}}};
  for (const auto& [a, b] : used) CHECK(minor_poly(a, b) == minor_poly(b, a));
}

TEST_CASE("minor identities pinning Q1 and Q3") {
  const PolyU q1 = Rat(10) * minor_poly({1, 2, 4}, {0, 3, 4}) -
                   Rat(3) * (minor_poly({0, 3, 4}, {0, 3, 4}) + minor_poly({1, 2, 4}, {1, 2, 4}));
  CHECK(q1 == q1_reference());

  const PolyU q3 = Rat(2) * minor_poly({0, 1, 4}, {2, 3, 4}) +
                   Rat(2) * minor_poly({0, 2, 4}, {1, 3, 4}) +
                   minor_poly({0, 3, 4}, {0, 3, 4}) + minor_poly({1, 2, 4}, {1, 2, 4});
  CHECK(q3 == q3_reference());
}

TEST_CASE("restriction pinned examples") {
  // dx0^dx1^dx2^dx3^du4 -> u44
  CHECK(restrict_to_lagrangian(dxdu_monomial({0, 1, 2, 3, 9})) == PolyU::var(4, 4));

  // du0^...^du4 -> det(u), cross-checked against the cofactor route
  CHECK(restrict_to_lagrangian(dxdu_monomial({5, 6, 7, 8, 9})) == minor_poly({}, {}));

  // all-dx restricts to the constant 1; a pure du-coefficient C gives
  // C det(u)
  CHECK(restrict_to_lagrangian(dxdu_monomial({0, 1, 2, 3, 4})) == PolyU(Rat(1)));
  CHECK(restrict_to_lagrangian(dxdu_monomial({5, 6, 7, 8, 9}, 7)) ==
        Rat(7) * minor_poly({}, {}));

  CHECK_THROWS_AS((void)restrict_to_lagrangian(QForm(10, 4)), std::domain_error);
  CHECK_THROWS_AS((void)restrict_to_lagrangian(QForm(8, 5)), std::domain_error);
}

TEST_CASE("restriction is linear") {
  RatSampler rs(37);
  const auto basis = multi_indices(10, 5);
  for (int it = 0; it < 40; ++it) {
    QForm a(10, 5), b(10, 5);
    for (int t = 0; t < 3; ++t) {
      a.add_term(basis[rs.next_int(0, 251)], rs.next());
      b.add_term(basis[rs.next_int(0, 251)], rs.next());
    }
    const Rat ca = rs.next(), cb = rs.next();
    CHECK(restrict_to_lagrangian(a.scaled(ca) + b.scaled(cb)) ==
          ca * restrict_to_lagrangian(a) + cb * restrict_to_lagrangian(b));
  }
}

TEST_CASE("restriction degree law: q du-factors give degree q") {
  RatSampler rs(41);
  for (int it = 0; it < 210; ++it) {
    // pick a random 5-subset of the 10 covectors
    std::vector<int> pool = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    MultiIndex mi;
    for (int t = 0; t < 5; ++t) {
      const long k = rs.next_int(0, static_cast<long>(pool.size()) - 1);
      mi.push_back(pool[k]);
      pool.erase(pool.begin() + k);
    }
    int q = 0;
    for (int i : mi)
      if (i >= 5) ++q;
    const PolyU f = restrict_to_lagrangian(QForm::monomial(10, mi, rs.next_nonzero()));
    REQUIRE_FALSE(f.is_zero());
    for (const auto& [m, c] : f.terms()) CHECK(static_cast<int>(m.size()) == q);
  }
}

TEST_CASE("unsigned dictionary annihilates the mixed rows") {
  // With E_{-g_i} -> du_i (no alternating signs) the restriction of the
  // w2+^w2^E_d row vanishes identically: its four determinant contributions
  // cancel pairwise. The signed dictionary is what reproduces the table.
  const QForm w2p = QForm::monomial(10, {1, 2}, Rat(1)) - QForm::monomial(10, {0, 3}, Rat(3));
  const QForm w2 = QForm::monomial(10, {0, 5}, Rat(3)) + QForm::monomial(10, {1, 6}, Rat(1)) +
                   QForm::monomial(10, {2, 7}, Rat(1)) + QForm::monomial(10, {3, 8}, Rat(3));
  const QForm row3_unsigned = wedge(wedge(w2p, w2), QForm::covector(10, 4));
  CHECK(restrict_to_lagrangian(row3_unsigned).is_zero());
  CHECK(restrict_to_lagrangian(darboux_covector_form(row3_unsigned))
            .proportional_to(PolyU::var(0, 3) + PolyU::var(1, 2)));

  // the twist is an involution and leaves the raising chain alone
  CHECK(darboux_matrix() * darboux_matrix() == QMatrix::identity(10));
  for (int i : {0, 1, 2, 3, 4, 5, 7, 9}) CHECK(darboux_matrix().at(i, i) == 1);
}

TEST_CASE("catalogue: twelve rows, names, flags") {
  const auto& cat = catalogue();
  REQUIRE(cat.size() == 12);

  CHECK(cat[0].short_name == "Q1");
  CHECK(cat[2].short_name == "L1");
  CHECK(cat[3].short_name == "Q2");
  CHECK(cat[7].short_name == "L2");
  CHECK(cat[9].short_name == "D");
  CHECK(cat[10].short_name == "Q3");

  // the reference expansions, exact
  CHECK(cat[0].poly == q1_reference());
  CHECK(cat[10].poly == q3_reference());

  // L1 and L2 up to the scalars the table drops
  CHECK(cat[2].poly.proportional_to(PolyU::var(0, 3) + PolyU::var(1, 2)));
  CHECK(cat[7].poly.proportional_to(PolyU::var(4, 4)));

  // Q2 = u03 u44 - u04 u34 + u12 u44 - u14 u24 up to scalar
  const PolyU q2 = PolyU::var(0, 3) * PolyU::var(4, 4) - PolyU::var(0, 4) * PolyU::var(3, 4) +
                   PolyU::var(1, 2) * PolyU::var(4, 4) - PolyU::var(1, 4) * PolyU::var(2, 4);
  CHECK(cat[3].poly.proportional_to(q2));

  // the discrepancy pair: all-dx row is constant, all-du row is det(u)
  CHECK(cat[6].discrepancy);
  CHECK(cat[9].discrepancy);
  CHECK(cat[6].poly.is_constant());
  CHECK(cat[9].poly.proportional_to(minor_poly({}, {})));
  for (std::size_t i = 0; i < 12; ++i)
    if (i != 6 && i != 9) CHECK_FALSE(cat[i].discrepancy);

  // every row carries its verified minor rendering
  for (const auto& e : cat) CHECK_FALSE(e.minor_expr.empty());
}

TEST_CASE("entry lookup") {
  CHECK(entry("Q1").name == "w2+^w2-^E_d");
  CHECK(entry("w4+^E_-d").short_name == "L2");
  try {
    (void)entry("Q9");
    CHECK(false);
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("valid names") != std::string::npos);
  }
}
