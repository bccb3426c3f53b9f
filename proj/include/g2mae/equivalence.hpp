#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "g2mae/mae.hpp"
#include "g2mae/qmatrix.hpp"

namespace g2mae::equivalence {

/// Linear symplectomorphisms of the contact plane act on covector
/// coordinates (dx0..dx4, du0..du4); column j of the matrix is the image of
/// basis covector j under the substitution rule.

/// tau: dx^i -> du_i, du_i -> -dx^i. tau^2 = -id.
QMatrix tau();

/// xi: fixes dx0..dx3 and du0..du3, sends dx^4 -> du_4, du_4 -> -dx^4.
QMatrix xi();

/// The standard pairing J(dx^i, du_i) = 1.
QMatrix standard_J();

/// S^T J S == J.
bool is_symplectic(const QMatrix& S);

/// Transports the equation: form -> pullback(S, form), poly -> restriction.
mae::MAEEntry act_on_equation(const QMatrix& S, const mae::MAEEntry& e);

struct Partition {
  /// Classes as sorted lists of catalogue indices (0..11).
  std::vector<std::vector<int>> classes;
  /// Representative name per nontrivial class (short name when available),
  /// in order of first appearance in the catalogue.
  std::vector<std::string> representatives;
  int nontrivial_count = 0;
};

/// Finest partition with e ~ act_on_equation(S, e) for every generator S,
/// entries compared as polynomials up to a nonzero rational scalar. Entries
/// with constant polynomial are pooled into a single trivial class first; a
/// class counts as nontrivial when it contains a nonconstant entry, and its
/// representative is the nonconstant member of lowest polynomial degree
/// (catalogue order breaking ties).
Partition classify(const std::vector<mae::MAEEntry>& entries, const std::vector<QMatrix>& gens);

struct SymbolMatrix {
  QMatrix m;          // 5x5 symmetric
  std::size_t rank;   // by exact elimination
};

/// Symmetrized gradient of F at the point: s_ii = dF/du_ii,
/// s_ij = s_ji = (1/2) dF/du_ij for i < j, with the upper-triangle u_ij
/// treated as independent variables.
SymbolMatrix symbol(const PolyU& F, const std::array<Rat, 15>& point);

/// Deterministic point on {F = 0}: assigns sampler values to all variables
/// but one in which F is linear (diagonal variables preferred, u00 first)
/// and solves; retries until the leading coefficient is nonzero.
std::optional<std::array<Rat, 15>> sample_on_hypersurface(const PolyU& F, RatSampler& rs,
                                                          int max_attempts = 64);

struct SeparationReport {
  std::array<std::string, 2> pair;
  /// Symbol ranks attained on seeded + sampled hypersurface points.
  std::array<std::set<std::size_t>, 2> ranks;
  std::string verdict;  // "separated" | "inconclusive"
  /// A rank-deficient on-hypersurface point of the separated side, if any.
  std::optional<std::array<Rat, 15>> witness;
};

/// Compares the symbol-rank behavior of two equations on their own
/// hypersurfaces. Benchmark rank 4 is the maximal symbol rank the catalogue
/// attains; "separated" requires exactly one side to attain a deficient
/// (< 4) rank while the other side's symbol is provably constant (defining
/// polynomial of degree <= 1). Never claims equivalence.
SeparationReport separate(const mae::MAEEntry& a, const mae::MAEEntry& b, std::uint64_t seed,
                          int samples = 100);

/// Ranks attained by the entry's symbol over the deterministic seed list
/// (points that happen to lie on the hypersurface) plus `samples` chart
/// points; sampling is seed-split per index and safe to parallelize.
std::set<std::size_t> attained_ranks(const mae::MAEEntry& e, std::uint64_t seed, int samples,
                                     std::optional<std::array<Rat, 15>>* deficient_witness = nullptr);

constexpr std::size_t kFullSymbolRank = 4;

}  // namespace g2mae::equivalence
