#include "schurlab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schurlab {

namespace {

long long ipow(int base, int exp) {
  long long p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

void check_dense_cap(int k, int d) {
  double dim = 1;
  for (int i = 0; i < k; ++i) dim *= d;
  if (dim > kMaxDenseDim) throw std::invalid_argument("d^k exceeds dense cap 4096");
}

// row index of P(pi) column x: output tuple o_j = i_{pi^{-1}(j)}
std::vector<long long> permutation_index_map(int k, int d, const std::vector<int>& pi) {
  std::vector<int> inv(k);
  for (int j = 0; j < k; ++j) inv[pi[j]] = j;
  const long long n = ipow(d, k);
  std::vector<long long> map(n);
  std::vector<int> digits(k);
  for (long long x = 0; x < n; ++x) {
    long long t = x;
    for (int j = k - 1; j >= 0; --j) {
      digits[j] = static_cast<int>(t % d);
      t /= d;
    }
    long long y = 0;
    for (int j = 0; j < k; ++j) y = y * d + digits[inv[j]];
    map[x] = y;
  }
  return map;
}

}  // namespace

std::vector<std::vector<int>> permutations_of(int k) {
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Matrix permutation_matrix(int k, int d, const std::vector<int>& pi) {
  if (static_cast<int>(pi.size()) != k) throw std::invalid_argument("pi must permute k items");
  check_dense_cap(k, d);
  const long long n = ipow(d, k);
  const auto map = permutation_index_map(k, d, pi);
  Matrix M = Matrix::Zero(n, n);
  for (long long x = 0; x < n; ++x) M(map[x], x) = 1.0;
  return M;
}

SchurProjectorSet schur_projectors(int k, int d) {
  if (k < 1 || k > 6) throw std::invalid_argument("schur_projectors: k <= 6 required");
  check_dense_cap(k, d);
  const long long n = ipow(d, k);
  const auto perms = permutations_of(k);
  std::vector<Partition> types;
  types.reserve(perms.size());
  for (const auto& pi : perms) types.push_back(cycle_type_of_permutation(pi));

  SchurProjectorSet set;
  set.k = k;
  set.d = d;
  const double kfact = static_cast<double>(factorial(k));
  for (const Partition& lambda : enumerate_partitions(k)) {
    Matrix P = Matrix::Zero(n, n);
    const double scale = static_cast<double>(dim_sym_irrep(lambda)) / kfact;
    for (std::size_t pi = 0; pi < perms.size(); ++pi) {
      const double chi = static_cast<double>(character(lambda, types[pi]));
      if (chi == 0) continue;
      const auto map = permutation_index_map(k, d, perms[pi]);
      for (long long x = 0; x < n; ++x) P(map[x], x) += chi;
    }
    set.projectors.emplace_back(lambda, scale * P);
  }
  return set;
}

std::vector<std::pair<Partition, double>> weak_schur_dist(const Matrix& gamma,
                                                          int k, int d) {
  check_dense_cap(k, d);
  const long long n = ipow(d, k);
  if (gamma.rows() != n || gamma.cols() != n)
    throw std::invalid_argument("weak_schur_dist: gamma dimension mismatch");
  const auto perms = permutations_of(k);
  // tr(P(pi) gamma) once per permutation, then combine per lambda
  std::vector<Complex> traces(perms.size());
  std::vector<Partition> types(perms.size());
  for (std::size_t p = 0; p < perms.size(); ++p) {
    const auto map = permutation_index_map(k, d, perms[p]);
    Complex t = 0;
    for (long long x = 0; x < n; ++x) t += gamma(x, map[x]);
    traces[p] = t;
    types[p] = cycle_type_of_permutation(perms[p]);
  }
  const double kfact = static_cast<double>(factorial(k));
  std::vector<std::pair<Partition, double>> dist;
  for (const Partition& lambda : enumerate_partitions(k)) {
    Complex sum = 0;
    for (std::size_t p = 0; p < perms.size(); ++p)
      sum += static_cast<double>(character(lambda, types[p])) * traces[p];
    sum *= static_cast<double>(dim_sym_irrep(lambda)) / kfact;
    if (std::abs(sum.imag()) > 1e-9)
      throw std::logic_error("weak_schur_dist: non-real probability");
    double pr = sum.real();
    if (pr < -1e-12) throw std::logic_error("weak_schur_dist: probability below -1e-12");
    dist.emplace_back(lambda, std::max(pr, 0.0));
  }
  return dist;
}

double JointDistribution::total() const {
  double t = 0;
  for (const auto& [key, p] : entries) t += p;
  return t;
}

double JointDistribution::type_prob(const std::vector<int>& type) const {
  double t = 0;
  for (const auto& [key, p] : entries)
    if (key.first == type) t += p;
  return t;
}

std::vector<std::pair<Partition, double>> JointDistribution::conditional(
    const std::vector<int>& type) const {
  const double norm = type_prob(type);
  std::vector<std::pair<Partition, double>> out;
  for (const auto& [key, p] : entries)
    if (key.first == type) out.emplace_back(key.second, norm > 0 ? p / norm : 0.0);
  return out;
}

namespace {

void enumerate_types(int num_irreps, int k, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out, int start) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int s = start; s < num_irreps; ++s) {
    cur.push_back(s);
    enumerate_types(num_irreps, k, cur, out, s);
    cur.pop_back();
  }
}

double orderings_of_type(const std::vector<int>& type) {
  double count = static_cast<double>(factorial(static_cast<int>(type.size())));
  int run = 1;
  for (std::size_t i = 1; i <= type.size(); ++i) {
    if (i < type.size() && type[i] == type[i - 1]) {
      ++run;
    } else {
      count /= static_cast<double>(factorial(run));
      run = 1;
    }
  }
  return count;
}

}  // namespace

JointDistribution joint_fourier_schur(const FiniteGroup& G, const Subgroup& H, int k) {
  check_dense_cap(k, G.order());
  const Matrix rho = hidden_subgroup_state(G, H);
  const CharacterTable table = character_table(G);
  const int M = static_cast<int>(table.dims.size());
  // B_sigma = rho Pi_sigma = Pi_sigma rho Pi_sigma (they commute)
  std::vector<Matrix> B(M);
  for (int s = 0; s < M; ++s) B[s] = rho * isotypic_projector(G, table, s);

  std::vector<std::vector<int>> types;
  std::vector<int> cur;
  enumerate_types(M, k, cur, types, 0);

  const auto perms = permutations_of(k);
  std::vector<std::vector<int>> inv_perms(perms.size());
  std::vector<Partition> cycle_types(perms.size());
  for (std::size_t p = 0; p < perms.size(); ++p) {
    inv_perms[p].resize(k);
    for (int j = 0; j < k; ++j) inv_perms[p][perms[p][j]] = j;
    cycle_types[p] = cycle_type_of_permutation(perms[p]);
  }
  const auto lambdas = enumerate_partitions(k);
  const double kfact = static_cast<double>(factorial(k));

  JointDistribution joint;
  joint.k = k;
  for (const auto& type : types) {
    // tr(P(pi) B_{s_1} x ... x B_{s_k}) factorizes over the cycles of pi
    std::vector<Complex> traces(perms.size());
    for (std::size_t p = 0; p < perms.size(); ++p) {
      Complex prod = 1.0;
      std::vector<bool> seen(k, false);
      for (int start = 0; start < k; ++start) {
        if (seen[start]) continue;
        Matrix cycle_prod = Matrix::Identity(G.order(), G.order());
        int j = start;
        do {
          seen[j] = true;
          cycle_prod = cycle_prod * B[type[j]];
          j = inv_perms[p][j];
        } while (j != start);
        prod *= cycle_prod.trace();
      }
      traces[p] = prod;
    }
    const double mult = orderings_of_type(type);
    for (const Partition& lambda : lambdas) {
      Complex sum = 0;
      for (std::size_t p = 0; p < perms.size(); ++p)
        sum += static_cast<double>(character(lambda, cycle_types[p])) * traces[p];
      sum *= static_cast<double>(dim_sym_irrep(lambda)) / kfact;
      double pr = mult * sum.real();
      if (std::abs(sum.imag()) > 1e-9)
        throw std::logic_error("joint_fourier_schur: non-real probability");
      if (pr < -1e-12) throw std::logic_error("joint_fourier_schur: probability below -1e-12");
      joint.entries[{type, lambda}] = std::max(pr, 0.0);
    }
  }
  return joint;
}

RepeatedIrrep prob_repeated_irrep(const FiniteGroup& G, const Subgroup& H, int k) {
  const CharacterTable table = character_table(G);
  const int M = static_cast<int>(table.dims.size());
  std::vector<double> p(M);
  for (int s = 0; s < M; ++s) p[s] = fourier_probability(G, table, H, s);
  // Pr(all distinct) = k! e_k(p_1,...,p_M)
  std::vector<double> e(k + 1, 0.0);
  e[0] = 1.0;
  for (int s = 0; s < M; ++s)
    for (int j = std::min(k, s + 1); j >= 1; --j) e[j] += e[j - 1] * p[s];
  RepeatedIrrep out;
  out.exact = (k < 2) ? 0.0 : 1.0 - static_cast<double>(factorial(k)) * e[k];
  out.exact = std::clamp(out.exact, 0.0, 1.0);
  out.bound = Rat(Int(k) * (k - 1) / 2 * table.d_max * table.d_max * H.order(), G.order());
  return out;
}

Rat hsp_failure_bound(int order_G, int order_H, int d_max, int k) {
  if (order_G < 1 || order_H < 1 || d_max < 1 || k < 0)
    throw std::invalid_argument("hsp_failure_bound: positive inputs required");
  return Rat(Int(k) * k * order_H * d_max * d_max, order_G);
}

}  // namespace schurlab
