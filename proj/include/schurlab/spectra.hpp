#pragma once

#include "schurlab/partition.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schurlab {

inline constexpr int kMaxK = 14;  // hard desk-scale cap

/// Exact distribution over partitions of k, stored in reverse-lex order.
struct PartitionDistribution {
  int k = 0;
  std::vector<std::pair<Partition, Rat>> probs;

  Rat prob(const Partition& lambda) const;
  Rat total() const;
};

/// One inequality check: lhs, rhs and whether the stated relation holds.
struct BoundReport {
  std::string name;
  int k = 0, d = 0;
  std::optional<int> d2;
  std::optional<int> r;
  Real lhs = 0, rhs = 0;
  bool satisfied = false;
};

/// Plancherel distribution: Pr(lambda) = (dim P_lambda)^2 / k!.
PartitionDistribution planch(int k);

/// Schur distribution: Pr(lambda) = dim P_lambda * dim Q_lambda^d / d^k.
/// Computed in both the dim-product and content-product forms, which must
/// agree exactly.
PartitionDistribution schur(int k, int d);

/// The unnormalized 1-norm sum |p - q| (the convention used throughout the
/// bound checks).  Conventional total variation is half of this.
Rat l1_distance(const PartitionDistribution& p, const PartitionDistribution& q);

inline Rat total_variation(const PartitionDistribution& p,
                           const PartitionDistribution& q) {
  return l1_distance(p, q) / 2;
}

/// Bhattacharyya coefficient sum sqrt(p q), to better than 1e-12 relative.
Real bhattacharyya(const PartitionDistribution& p, const PartitionDistribution& q);

/// Squared Bhattacharyya coefficient (classical fidelity, F = B^2).
Real fidelity(const PartitionDistribution& p, const PartitionDistribution& q);

/// Exact Plancherel expectation of (content sum)^power over partitions of k.
Rat kerov_moment(int k, int power);

/// Closed form (2m)! k! / (4^m m! (k-2m)!) for even power = 2m (0 when
/// 2m > k), 0 for odd power.  Kept separate from kerov_moment so the two
/// can be compared; they agree for power <= 2 but not in general.
Rat kerov_moment_closed_form(int k, int power);

/// k/36d <= ||Schur(k,d) - Planch(k)||_1 and Delta^2 <= 2k^2/d^2,
/// both checked in exact rational arithmetic.  Requires 2 <= k <= d.
BoundReport check_delta_bounds(int k, int d);

/// ||Schur(k,d1)-Schur(k,d2)||_1 >= ||Schur(k,r d1)-Schur(k,r d2)||_1.
BoundReport check_monotonicity(int k, int d1, int d2, int r);

/// Delta/2 >= 1 - exp(-(k/d - 1)/10368) for k >= d >= 2.
BoundReport check_amplified_lower_bound(int k, int d);

/// Bhattacharyya(Schur(k,d), Planch(k)) >= 1 - k^3/(12 d^2) for 2 <= k <= d.
BoundReport check_fidelity_lower_bound(int k, int d);

struct Advantage {
  Rat l1;       // ||Schur(k,d) - Schur(k,d/r)||_1
  Rat success;  // 1/2 + l1/4, equal-prior optimal Bayes success
};

/// Distinguishing rank d from rank d/r by weak Schur sampling on k copies.
Advantage distinguish_advantage(int k, int d, int r);

}  // namespace schurlab
