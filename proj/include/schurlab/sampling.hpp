#pragma once

#include "schurlab/groups.hpp"
#include "schurlab/spectra.hpp"

#include <map>

namespace schurlab {

inline constexpr int kMaxDenseDim = 4096;

/// Permutation matrix of the register-permuting action of pi on (C^d)^{x k}:
/// P(pi)|i_1...i_k> = |i_{pi^{-1}(1)} ... i_{pi^{-1}(k)}>.
Matrix permutation_matrix(int k, int d, const std::vector<int>& pi);

struct SchurProjectorSet {
  int k = 0, d = 0;
  std::vector<std::pair<Partition, Matrix>> projectors;
};

/// Pi_lambda = (dim P_lambda / k!) sum_pi chi_lambda(pi) P(pi), for every
/// lambda |- k.  Requires d^k <= 4096 and k <= 6.
SchurProjectorSet schur_projectors(int k, int d);

/// Pr(lambda) = tr(Pi_lambda gamma) for a density matrix gamma on (C^d)^{x k}.
std::vector<std::pair<Partition, double>> weak_schur_dist(const Matrix& gamma,
                                                          int k, int d);

/// Joint outcome law of per-register weak Fourier sampling followed by weak
/// Schur sampling on rho_H^{x k}.  Irrep sequences are reported by type
/// (sorted multiset of irrep indices).
struct JointDistribution {
  int k = 0;
  // (irrep type, lambda) -> probability
  std::map<std::pair<std::vector<int>, Partition>, double> entries;

  double total() const;
  /// Marginal probability of an irrep type.
  double type_prob(const std::vector<int>& type) const;
  /// Conditional distribution of lambda given a type (normalized).
  std::vector<std::pair<Partition, double>> conditional(const std::vector<int>& type) const;
};

JointDistribution joint_fourier_schur(const FiniteGroup& G, const Subgroup& H, int k);

struct RepeatedIrrep {
  double exact;  // 1 - Pr(all k observed irreps distinct)
  Rat bound;     // C(k,2) d_max^2 |H| / |G|
};

RepeatedIrrep prob_repeated_irrep(const FiniteGroup& G, const Subgroup& H, int k);

/// Worst-case failure bound k^2 |H| d_max^2 / |G|.
Rat hsp_failure_bound(int order_G, int order_H, int d_max, int k);

/// All permutations of {0..k-1}; lexicographic, identity first.
std::vector<std::vector<int>> permutations_of(int k);

}  // namespace schurlab
