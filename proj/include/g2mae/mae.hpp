#pragma once

#include <string>
#include <vector>

#include "g2mae/exterior.hpp"
#include "g2mae/polyu.hpp"

namespace g2mae::mae {

/// Covector names on the contact plane: 0..4 -> dx0..dx4, 5..9 -> du0..du4.
std::string covector_name(int idx);

/// Translation from the module basis of m to the Darboux covector frame:
/// E_{g_i} -> dx^i, E_d -> dx^4, E_{-g_i} -> (-1)^i du_i, E_{-d} -> du_4.
/// The alternating signs on the lowering chain are forced: they are the
/// symplectic-dual-basis convention for an sl2 weight chain, and without
/// them the mixed rows of the equation table (every w2-wedge, L1 and Q2
/// among them) restrict to the zero polynomial -- the determinant
/// contributions cancel pairwise for any chain pattern.
QForm darboux_covector_form(const QForm& m_form);

/// The diagonal +-1 matrix realizing darboux_covector_form.
QMatrix darboux_matrix();

/// F(u) = Omega(l0,...,l4) with l_i = e_i + sum_j u_ij f_j, where e_i is
/// dual to dx^i and f_j to du_j, u symmetric. Each decomposable term of
/// Omega contributes its coefficient times the 5x5 determinant of pairings
/// <cov_s, l_r>: a dx^j column is the indicator of row j, a du_j column is
/// the linear column (u_0j..u_4j). Requires degree 5 over the 10 covectors.
PolyU restrict_to_lagrangian(const QForm& omega);

/// Determinant of the symbolic symmetric matrix (u_ij) with the given rows
/// and columns removed; empty deletions give det(u). Throws on unequal
/// deletion counts or out-of-range indices.
PolyU minor_poly(const std::vector<int>& rows_removed, const std::vector<int>& cols_removed);

/// One equation of the catalogue. poly == restrict_to_lagrangian(form)
/// exactly. minor_expr is a best-effort rendering in M-notation, attached
/// only after the expanded cross-check passes; the expanded poly is the
/// source of truth. discrepancy marks the two rows (the all-dx and all-du
/// forms) whose direct evaluation swaps the conventional det/empty assignment.
struct MAEEntry {
  std::string name;        // wedge name, e.g. "w2+^w2-^E_d"
  std::string short_name;  // "Q1", "L1", "Q2", "D", "L2", "Q3" or ""
  QForm form;
  PolyU poly;
  std::string minor_expr;
  bool discrepancy = false;
};

/// The twelve equations, in the order of the twelve invariant 5-forms. Every
/// minor-notation row is verified against the expanded restriction at
/// construction time (up to one nonzero scalar per row).
const std::vector<MAEEntry>& catalogue();

/// Lookup by wedge name or short name; throws std::domain_error listing the
/// valid names.
const MAEEntry& entry(const std::string& name);

std::vector<std::string> entry_names();

/// The reference expanded quadratics (fixed test vectors for the catalogue):
///   Q1 = 3u03^2 + 3u12^2 - 10u02u13 - 3u11u22 + 10u01u23 - 3u00u33
///   Q3 = 2u02u13 + u11u22 + 2u01u23 + u00u33 - u03^2 - 4u12u03 - u12^2
PolyU q1_reference();
PolyU q3_reference();

}  // namespace g2mae::mae
