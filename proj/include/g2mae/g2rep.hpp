#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2mae/qmatrix.hpp"
#include "g2mae/rootsys.hpp"

namespace g2mae::g2rep {

/// Basis of the 10-dimensional orbit module m, in the fixed order
///   0..3: E_{g0}..E_{g3}   (gi = a2 + i*a1, ad_Z degree +1)
///   4:    E_d              (d = 3a1+2a2,    ad_Z degree +2)
///   5..8: E_{-g0}..E_{-g3} (degree -1)
///   9:    E_{-d}           (degree -2)
/// Under the Darboux dictionary, 0..3 are dx0..dx3, 4 is dx4, 5..8 are
/// du0..du3 and 9 is du4.
struct MLabel {
  std::string name;  // "E_g1", "E_-d", ...
  rootsys::Root root;
  int adz_degree;
};

const std::array<MLabel, 10>& mbasis();

/// Index of the dual partner (i <-> i+5 mod 10 within the two halves).
int dual_index(int i);

enum class OpName { Hdelta, Halpha1, Ealpha1, Eminusalpha1 };

OpName op_from_string(const std::string& s);  // "H_d", "H_a1", "E_a1", "E_-a1"
std::string op_name(OpName n);

/// The four stabilizer-algebra operators on m, as 10x10 rational matrices
/// (column j = image of basis vector j):
///  - H_d acts by the ad_Z degrees,
///  - H_a1 acts diagonally by 2(a1,b)/(a1,a1) = 3(a1,b) on E_b,
///  - E_{+-a1} act by the structure-constant tables
///      N_{a1,g0}=1  N_{a1,g1}=2  N_{a1,g2}=3
///      N_{a1,-g1}=-3 N_{a1,-g2}=-2 N_{a1,-g3}=-1
///      N_{-a1,g1}=3 N_{-a1,g2}=2 N_{-a1,g3}=1
///      N_{-a1,-g0}=-1 N_{-a1,-g1}=-2 N_{-a1,-g2}=-3
///    and annihilate E_{+-d}.
QMatrix ad_operator(OpName name);

/// The invariant symplectic pairing on m. Nonzero exactly on dual pairs;
/// normalized so that (E_{g1}, E_{-g1}) = 1 and (E_d, E_{-d}) = 2. Exact
/// ad-invariance under the structure constants above then forces the values
/// 1/3 on the long-root pairs (g0, g3): the all-degrees normalization of the
/// Killing-dual basis is not compatible with these N tables. The two free
/// scalars (short-pair and d-pair weights) are conformal choices.
QMatrix pairing_matrix();

Rat pairing(int i, int j);

/// Eigenvalue of H on v; throws std::domain_error if v is zero or not an
/// eigenvector.
Rat weight_of(const std::vector<Rat>& v, const QMatrix& H);

}  // namespace g2mae::g2rep
