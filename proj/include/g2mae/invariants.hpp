#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2mae/exterior.hpp"
#include "g2mae/g2rep.hpp"

namespace g2mae::invariants {

/// A named h'-invariant form on m. Every named form is an H_d-eigenform and
/// is annihilated by both E_{+-a1} (re-checked at construction).
struct NamedForm {
  std::string name;
  QForm form;
  long hdelta_weight = 0;
};

/// The eight generators: E_d, E_-d, w2+, w2-, w2, w4+, w4-, w4, where
///   w2+- = E_{+-g1} ^ E_{+-g2} - 3 E_{+-g0} ^ E_{+-g3}
///   w2   = 3 E_g0^E_-g0 + E_g1^E_-g1 + E_g2^E_-g2 + 3 E_g3^E_-g3
///   w4+- = E_{+-g0} ^ E_{+-g1} ^ E_{+-g2} ^ E_{+-g3}
///   w4   = the six balanced quartic terms.
const std::vector<NamedForm>& generators();
const NamedForm& generator(const std::string& name);

/// Basis of the h'-invariant k-forms, k = 1..5, dimensions (2,4,6,9,12).
/// Returned as named wedge products of the generators, verified independent,
/// invariant, and spanning the solver output.
std::vector<NamedForm> invariant_basis(int k);

/// Raw output of the joint-invariant solver (kernel of the stacked
/// E_{+-a1} derivation system) in echelon normal form.
std::vector<QForm> solved_invariants(int k, ExecPolicy pol = ExecPolicy::Auto);

/// The twelve invariant 5-forms, in the fixed order
///   w2+^w2-^E_d, w2+^w2-^E_-d, w2+^w2^E_d, w2+^w2^E_-d,
///   w2-^w2^E_d, w2-^w2^E_-d, w4+^E_d, w4+^E_-d,
///   w4-^E_d, w4-^E_-d, w4^E_d, w4^E_-d.
std::vector<NamedForm> twelve_five_forms();

/// H_d-weights of the eight generators and the twelve 5-forms.
std::map<std::string, long> conformal_weights();

/// Exact re-substitution: derivation_extend(X, f) == 0 for
/// X in {E_a1, E_-a1, H_a1}.
bool is_invariant(const QForm& f);

}  // namespace g2mae::invariants
