#pragma once

#include "schurlab/groups.hpp"

#include <Eigen/Dense>

#include <vector>

namespace schurlab {

using Vector = Eigen::VectorXcd;

/// One branch of an amplified swap test input: amplitude, the two compared
/// states, whether they are equal (theta = 1) or orthogonal (theta = 0).
struct SwapBranch {
  Complex amplitude;
  Vector alpha;
  Vector beta;
  int theta = 0;
};

struct SwapTestInstance {
  int m = 1;    // copies per side
  int dim = 2;  // ambient dimension of alpha/beta
  std::vector<SwapBranch> branches;
};

/// U = 1 - 2 Pi on (C^dim)^{x 2m}, where Pi projects every pair
/// (i-th alpha copy, i-th beta copy) onto its symmetric subspace.
/// Requires dim^{2m} <= 4096.
Matrix amplified_swap_unitary(int m, int dim);

struct SwapFidelity {
  double fidelity;       // |<psi'|U|psi>|^2 from explicit state vectors
  double exact_formula;  // |1 - sum |a_i|^2 delta_{theta_i,0} 2^{1-m}|^2
  double bound;          // 1 - 2^{2-m}
};

SwapFidelity swap_fidelity(const SwapTestInstance& instance);

/// Accumulated disturbance after l applications: eps0 + l * 2^{1-m/2}.
double error_accumulation(int l, int m, double eps0);

struct CollisionPlan {
  int d = 0, r = 0;
  int table_size = 0;    // round((d/r)^{1/3})
  int m = 0;             // 2 + 2 ceil(log2(d/r))
  int grover_iters = 0;  // ceil((d/r)^{1/3})
  long long total_queries = 0;  // m*table_size + 2*m*grover_iters
};

CollisionPlan plan_collision_algorithm(int d, int r);

/// floor(4 / (pi sqrt(asin((r/d)^{2/3})))), the iteration count for the
/// unknown-input-basis variant.
int grover_iterations_unknown_input(int d, int r);

enum class CollisionCase { OneToOne, RToOne };

struct MonteCarloReport {
  double success_rate = 0;
  double mean_queries = 0;
  int trials = 0;
  unsigned long long seed = 0;
};

/// Classical Monte Carlo over random functions: builds a random table,
/// counts marked items, evaluates the Grover success probability
/// analytically (iterations capped at the planned budget, rotation stopped
/// at the known optimum) and subtracts the swap-test disturbance budget.
MonteCarloReport montecarlo_collision(int d, int r, int trials,
                                      unsigned long long seed, CollisionCase c);

}  // namespace schurlab
