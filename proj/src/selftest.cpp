#include "g2mae/selftest.hpp"

#include "g2mae/equivalence.hpp"
#include "g2mae/g2rep.hpp"
#include "g2mae/invariants.hpp"
#include "g2mae/mae.hpp"
#include "g2mae/rootsys.hpp"

namespace g2mae::selftest {

using g2rep::OpName;

namespace {

void run(std::vector<CheckResult>& out, const std::string& name, bool ok,
         const std::string& detail = "") {
  out.push_back({name, ok, detail});
}

}  // namespace

std::vector<CheckResult> run_all(std::uint64_t seed) {
  std::vector<CheckResult> out;

  try {
    const QMatrix e = g2rep::ad_operator(OpName::Ealpha1);
    const QMatrix f = g2rep::ad_operator(OpName::Eminusalpha1);
    const QMatrix h = g2rep::ad_operator(OpName::Halpha1);
    run(out, "sl2-triple [e,f]=h", e.commutator(f) == h);
    run(out, "sl2-triple [h,e]=2e", h.commutator(e) == e.scaled(Rat(2)));
    run(out, "sl2-triple [h,f]=-2f", h.commutator(f) == f.scaled(Rat(-2)));

    // Pairing invariance as the matrix identity X^T W + W X = 0.
    const QMatrix W = g2rep::pairing_matrix();
    bool inv = W.is_antisymmetric() && rank_bareiss(W) == 10;
    for (OpName n : {OpName::Hdelta, OpName::Halpha1, OpName::Ealpha1, OpName::Eminusalpha1}) {
      const QMatrix X = g2rep::ad_operator(n);
      if (!(X.transpose() * W + W * X).is_zero()) inv = false;
    }
    run(out, "pairing ad-invariance (all four operators)", inv);

    bool iso = true;
    for (int i = 0; i < 5 && iso; ++i)
      for (int j = 0; j < 5; ++j)
        if (sgn(W.at(i, j)) != 0 || sgn(W.at(5 + i, 5 + j)) != 0) {
          iso = false;
          break;
        }
    run(out, "pairing bi-isotropy", iso);

    const long expected[5] = {2, 4, 6, 9, 12};
    bool ladder = true;
    std::string dims;
    for (int k = 1; k <= 5; ++k) {
      const auto basis = invariants::solved_invariants(k);
      dims += (k > 1 ? "," : "") + std::to_string(basis.size());
      if (static_cast<long>(basis.size()) != expected[k - 1]) ladder = false;
      for (const auto& b : basis)
        if (!invariants::is_invariant(b)) ladder = false;
    }
    run(out, "dimension ladder (2,4,6,9,12) + re-substitution", ladder, "dims=" + dims);

    bool named_ok = true;
    for (int k = 1; k <= 5; ++k)
      for (const auto& nf : invariants::invariant_basis(k))
        if (!invariants::is_invariant(nf.form)) named_ok = false;
    run(out, "named invariant bases re-substitution", named_ok);

    run(out, "catalogue minor cross-checks", mae::catalogue().size() == 12);

    const QMatrix tau = equivalence::tau(), xi = equivalence::xi();
    run(out, "tau symplectic certificate", equivalence::is_symplectic(tau));
    run(out, "xi symplectic certificate", equivalence::is_symplectic(xi));

    const auto ptau = equivalence::classify(mae::catalogue(), {tau});
    run(out, "six nontrivial tau-classes", ptau.nontrivial_count == 6,
        "count=" + std::to_string(ptau.nontrivial_count));
    const auto pboth = equivalence::classify(mae::catalogue(), {tau, xi});
    const std::vector<std::string> want = {"Q1", "L1", "L2", "Q3"};
    run(out, "final representatives Q1,L1,L2,Q3",
        pboth.nontrivial_count == 4 && pboth.representatives == want);

    const auto sep = equivalence::separate(mae::entry("Q1"), mae::entry("L1"), seed);
    run(out, "Q1 vs L1 separated", sep.verdict == "separated");
  } catch (const std::exception& ex) {
    run(out, "certificate run", false, ex.what());
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace g2mae::selftest
