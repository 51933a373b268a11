#include "schurlab/collision.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace schurlab {

namespace {

long long ipow_ll(int base, int exp) {
  long long p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

// symmetrize registers p and q (0-based, dim^nreg state space, register 0
// most significant)
void apply_pair_projector(Vector& v, int nreg, int dim, int p, int q) {
  const long long n = v.size();
  const long long stride_p = ipow_ll(dim, nreg - 1 - p);
  const long long stride_q = ipow_ll(dim, nreg - 1 - q);
  for (long long x = 0; x < n; ++x) {
    const int ip = static_cast<int>((x / stride_p) % dim);
    const int iq = static_cast<int>((x / stride_q) % dim);
    if (ip >= iq) continue;  // handle each unordered pair once
    const long long y = x + (iq - ip) * stride_p + (ip - iq) * stride_q;
    const Complex avg = (v[x] + v[y]) / 2.0;
    v[x] = avg;
    v[y] = avg;
  }
}

void apply_swap_projector(Vector& v, int m, int dim) {
  for (int i = 0; i < m; ++i) apply_pair_projector(v, 2 * m, dim, i, m + i);
}

}  // namespace

Matrix amplified_swap_unitary(int m, int dim) {
  if (m < 1 || dim < 2) throw std::invalid_argument("amplified_swap_unitary: bad args");
  double size = 1;
  for (int i = 0; i < 2 * m; ++i) size *= dim;
  if (size > 4096) throw std::invalid_argument("amplified_swap_unitary: dim^{2m} > 4096");
  const long long n = ipow_ll(dim, 2 * m);
  Matrix U(n, n);
  for (long long col = 0; col < n; ++col) {
    Vector v = Vector::Zero(n);
    v[col] = 1.0;
    apply_swap_projector(v, m, dim);
    U.col(col) = -2.0 * v;
    U(col, col) += 1.0;
  }
  return U;
}

SwapFidelity swap_fidelity(const SwapTestInstance& inst) {
  const int m = inst.m, dim = inst.dim;
  const int nb = static_cast<int>(inst.branches.size());
  if (nb == 0) throw std::invalid_argument("swap_fidelity: no branches");
  double size = 1;
  for (int i = 0; i < 2 * m; ++i) size *= dim;
  if (size * nb > 65536) throw std::invalid_argument("swap_fidelity: state too large");
  const long long block = ipow_ll(dim, 2 * m);

  double norm = 0;
  for (const auto& b : inst.branches) {
    norm += std::norm(b.amplitude);
    if (std::abs(b.alpha.norm() - 1.0) > 1e-12 || std::abs(b.beta.norm() - 1.0) > 1e-12)
      throw std::invalid_argument("swap_fidelity: branch states must be unit vectors");
    const double overlap = std::abs(b.alpha.dot(b.beta));
    if (b.theta == 1 ? std::abs(overlap - 1.0) > 1e-12 : overlap > 1e-12)
      throw std::invalid_argument("swap_fidelity: theta inconsistent with overlap");
  }
  if (std::abs(norm - 1.0) > 1e-12)
    throw std::invalid_argument("swap_fidelity: amplitudes not normalized");

  // psi = sum_i a_i alpha_i^{x m} beta_i^{x m} |gamma_i>, gamma_i = ancilla
  // basis state i
  auto branch_vector = [&](const SwapBranch& b) {
    Vector v = Vector::Ones(1);
    for (int c = 0; c < m; ++c) {
      Vector next(v.size() * dim);
      for (long long x = 0; x < v.size(); ++x)
        for (int j = 0; j < dim; ++j) next[x * dim + j] = v[x] * b.alpha[j];
      v = std::move(next);
    }
    for (int c = 0; c < m; ++c) {
      Vector next(v.size() * dim);
      for (long long x = 0; x < v.size(); ++x)
        for (int j = 0; j < dim; ++j) next[x * dim + j] = v[x] * b.beta[j];
      v = std::move(next);
    }
    return v;
  };

  Vector u_psi = Vector::Zero(block * nb);
  Vector psi_prime = Vector::Zero(block * nb);
  for (int i = 0; i < nb; ++i) {
    const Vector bv = branch_vector(inst.branches[i]);
    Vector proj = bv;
    apply_swap_projector(proj, m, dim);
    const Vector after = bv - 2.0 * proj;  // U acting on this branch
    const double sign = inst.branches[i].theta == 1 ? -1.0 : 1.0;
    for (long long x = 0; x < block; ++x) {
      u_psi[i * block + x] += inst.branches[i].amplitude * after[x];
      psi_prime[i * block + x] += sign * inst.branches[i].amplitude * bv[x];
    }
  }

  SwapFidelity out;
  out.fidelity = std::norm(psi_prime.dot(u_psi));
  double orth_weight = 0;
  for (const auto& b : inst.branches)
    if (b.theta == 0) orth_weight += std::norm(b.amplitude);
  const double inner = 1.0 - orth_weight * std::pow(2.0, 1 - m);
  out.exact_formula = inner * inner;
  out.bound = 1.0 - std::pow(2.0, 2 - m);
  return out;
}

double error_accumulation(int l, int m, double eps0) {
  if (l < 0 || m < 1) throw std::invalid_argument("error_accumulation: bad args");
  return eps0 + l * std::pow(2.0, 1.0 - m / 2.0);
}

CollisionPlan plan_collision_algorithm(int d, int r) {
  if (r < 1 || d % r != 0 || d / r < 2)
    throw std::invalid_argument("plan_collision_algorithm: need r | d and d/r >= 2");
  const double ratio = static_cast<double>(d) / r;
  const double root = std::cbrt(ratio);
  CollisionPlan p;
  p.d = d;
  p.r = r;
  p.table_size = static_cast<int>(std::llround(root));
  p.grover_iters = static_cast<int>(std::ceil(root - 1e-9));
  p.m = 2 + 2 * static_cast<int>(std::ceil(std::log2(ratio) - 1e-9));
  p.total_queries = static_cast<long long>(p.m) * p.table_size +
                    2LL * p.m * p.grover_iters;
  return p;
}

int grover_iterations_unknown_input(int d, int r) {
  if (r < 1 || r > d) throw std::invalid_argument("grover_iterations_unknown_input: need 1 <= r <= d");
  const double x = std::pow(static_cast<double>(r) / d, 2.0 / 3.0);
  return static_cast<int>(std::floor(4.0 / (std::numbers::pi * std::sqrt(std::asin(x)))));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

MonteCarloReport montecarlo_collision(int d, int r, int trials,
                                      unsigned long long seed, CollisionCase c) {
  if (trials < 1) throw std::invalid_argument("montecarlo_collision: trials >= 1");
  const CollisionPlan plan = plan_collision_algorithm(d, r);
  double success_sum = 0, query_sum = 0;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(splitmix64(seed * 0x100000001B3ULL + static_cast<std::uint64_t>(trial)));
    // random function: input i has value cls[i]; r-to-one uses d/r classes of
    // size r, one-to-one gives every input its own value
    std::vector<int> cls(d);
    if (c == CollisionCase::RToOne) {
      std::vector<int> slots(d);
      std::iota(slots.begin(), slots.end(), 0);
      std::shuffle(slots.begin(), slots.end(), rng);
      for (int i = 0; i < d; ++i) cls[slots[i]] = i / r;
    } else {
      std::iota(cls.begin(), cls.end(), 0);
    }
    // table of distinct inputs
    std::vector<int> inputs(d);
    std::iota(inputs.begin(), inputs.end(), 0);
    std::shuffle(inputs.begin(), inputs.end(), rng);
    std::set<int> table_values;
    std::set<int> table_inputs;
    for (int i = 0; i < plan.table_size; ++i) {
      table_inputs.insert(inputs[i]);
      table_values.insert(cls[inputs[i]]);
    }
    // marked items outside the table
    int marked = 0;
    for (int j = 0; j < d; ++j)
      if (!table_inputs.contains(j) && table_values.contains(cls[j])) ++marked;
    const int outside = d - plan.table_size;
    // iteration count from the r-to-one hypothesis (the algorithm knows r and
    // the table's distinct-value count), capped at the planned budget
    const int hyp_marked =
        std::max(0, r * static_cast<int>(table_values.size()) - plan.table_size);
    int iters = plan.grover_iters;
    if (hyp_marked > 0 && hyp_marked < outside) {
      const double theta_hyp = std::asin(std::sqrt(static_cast<double>(hyp_marked) / outside));
      const int opt = static_cast<int>(std::llround(std::numbers::pi / (4.0 * theta_hyp) - 0.5));
      iters = std::clamp(opt, 0, plan.grover_iters);
    }
    double success = 0;
    if (marked > 0) {
      const double theta = std::asin(std::sqrt(std::min(1.0, static_cast<double>(marked) / outside)));
      success = std::pow(std::sin((2.0 * iters + 1.0) * theta), 2.0);
      success -= error_accumulation(iters, plan.m, 0.0);
      success = std::clamp(success, 0.0, 1.0);
    }
    success_sum += success;
    query_sum += static_cast<double>(plan.m) * plan.table_size + 2.0 * plan.m * iters;
  }
  MonteCarloReport rep;
  rep.success_rate = success_sum / trials;
  rep.mean_queries = query_sum / trials;
  rep.trials = trials;
  rep.seed = seed;
  return rep;
}

}  // namespace schurlab
