#include "schurlab/spectra.hpp"

#include <stdexcept>

namespace schurlab {

namespace {

void check_k(int k) {
  if (k < 1 || k > kMaxK) throw std::invalid_argument("k out of range [1,14]");
}

Int pow_int(int base, int exp) {
  Int p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

}  // namespace

Rat PartitionDistribution::prob(const Partition& lambda) const {
  for (const auto& [l, p] : probs)
    if (l == lambda) return p;
  throw std::invalid_argument("partition not in distribution support");
}

Rat PartitionDistribution::total() const {
  Rat t = 0;
  for (const auto& [l, p] : probs) t += p;
  return t;
}

PartitionDistribution planch(int k) {
  check_k(k);
  PartitionDistribution dist;
  dist.k = k;
  const Int kfact = factorial(k);
  for (const Partition& lambda : enumerate_partitions(k)) {
    const Int dim = dim_sym_irrep(lambda);
    dist.probs.emplace_back(lambda, Rat(dim * dim, kfact));
  }
  return dist;
}

PartitionDistribution schur(int k, int d) {
  check_k(k);
  if (d < 1) throw std::invalid_argument("d must be positive");
  PartitionDistribution dist;
  dist.k = k;
  const Int kfact = factorial(k);
  const Int dk = pow_int(d, k);
  for (const Partition& lambda : enumerate_partitions(k)) {
    const Int dimP = dim_sym_irrep(lambda);
    const Rat via_dims(dimP * dim_unitary_irrep(lambda, d), dk);
    // content-product form: (dim P)^2/k! * prod (1 + (j-i)/d)
    Rat via_contents(dimP * dimP, kfact);
    if (lambda.rows() > d) {
      via_contents = 0;
    } else {
      for (int i = 1; i <= lambda.rows(); ++i)
        for (int j = 1; j <= lambda.parts()[i - 1]; ++j)
          via_contents *= Rat(d + j - i, d);
    }
    if (via_dims != via_contents)
      throw std::logic_error("schur: dim-product and content-product forms disagree");
    dist.probs.emplace_back(lambda, via_dims);
  }
  return dist;
}

Rat l1_distance(const PartitionDistribution& p, const PartitionDistribution& q) {
  if (p.k != q.k) throw std::invalid_argument("l1_distance: mismatched k");
  Rat sum = 0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    Rat diff = p.probs[i].second - q.probs[i].second;
    sum += diff < 0 ? -diff : diff;
  }
  return sum;
}

Real bhattacharyya(const PartitionDistribution& p, const PartitionDistribution& q) {
  if (p.k != q.k) throw std::invalid_argument("bhattacharyya: mismatched k");
  Real sum = 0;
  for (std::size_t i = 0; i < p.probs.size(); ++i)
    sum += sqrt(to_real(p.probs[i].second) * to_real(q.probs[i].second));
  return sum;
}

Real fidelity(const PartitionDistribution& p, const PartitionDistribution& q) {
  const Real b = bhattacharyya(p, q);
  return b * b;
}

Rat kerov_moment(int k, int power) {
  check_k(k);
  if (power < 0) throw std::invalid_argument("power must be non-negative");
  Rat sum = 0;
  const Int kfact = factorial(k);
  for (const Partition& lambda : enumerate_partitions(k)) {
    const Int dim = dim_sym_irrep(lambda);
    Int v = 1;
    const Int c = lambda.content_sum();
    for (int i = 0; i < power; ++i) v *= c;
    sum += Rat(dim * dim * v, kfact);
  }
  return sum;
}

Rat kerov_moment_closed_form(int k, int power) {
  if (power % 2 == 1) return 0;
  const int m = power / 2;
  if (k - 2 * m < 0) return 0;
  Int num = factorial(2 * m) * factorial(k);
  Int den = pow_int(4, m) * factorial(m) * factorial(k - 2 * m);
  return Rat(num, den);
}

BoundReport check_delta_bounds(int k, int d) {
  if (!(2 <= k && k <= d)) throw std::invalid_argument("check_delta_bounds: need 2 <= k <= d");
  check_k(k);
  const Rat delta = l1_distance(schur(k, d), planch(k));
  const Rat lower(k, 36 * d);
  // upper bound compared via squaring: Delta^2 <= 2 k^2 / d^2
  const Rat upper_sq(Int(2) * k * k, Int(d) * d);
  BoundReport rep;
  rep.name = "delta_bounds";
  rep.k = k;
  rep.d = d;
  rep.lhs = to_real(delta);
  rep.rhs = sqrt(to_real(upper_sq));
  rep.satisfied = (lower <= delta) && (delta * delta <= upper_sq);
  return rep;
}

BoundReport check_monotonicity(int k, int d1, int d2, int r) {
  check_k(k);
  if (d1 < 1 || d2 < 1 || r < 2) throw std::invalid_argument("check_monotonicity: bad dims");
  const Rat lhs = l1_distance(schur(k, d1), schur(k, d2));
  const Rat rhs = l1_distance(schur(k, r * d1), schur(k, r * d2));
  BoundReport rep;
  rep.name = "monotonicity";
  rep.k = k;
  rep.d = d1;
  rep.d2 = d2;
  rep.r = r;
  rep.lhs = to_real(lhs);
  rep.rhs = to_real(rhs);
  rep.satisfied = lhs >= rhs;
  return rep;
}

BoundReport check_amplified_lower_bound(int k, int d) {
  check_k(k);
  if (!(k >= d && d >= 2))
    throw std::invalid_argument("check_amplified_lower_bound: need k >= d >= 2");
  const Rat half_delta = l1_distance(schur(k, d), planch(k)) / 2;
  const Real rhs = 1 - exp(-(Real(k) / d - 1) / 10368);
  BoundReport rep;
  rep.name = "amplified_lower_bound";
  rep.k = k;
  rep.d = d;
  rep.lhs = to_real(half_delta);
  rep.rhs = rhs;
  rep.satisfied = rep.lhs >= rhs;
  return rep;
}

BoundReport check_fidelity_lower_bound(int k, int d) {
  check_k(k);
  if (!(2 <= k && k <= d && d <= 40))
    throw std::invalid_argument("check_fidelity_lower_bound: need 2 <= k <= d <= 40");
  const Real b = bhattacharyya(schur(k, d), planch(k));
  const Real rhs = 1 - Real(Int(k) * k * k) / (12 * Real(Int(d) * d));
  BoundReport rep;
  rep.name = "fidelity_lower_bound";
  rep.k = k;
  rep.d = d;
  rep.lhs = b;
  rep.rhs = rhs;
  rep.satisfied = b >= rhs;
  return rep;
}

Advantage distinguish_advantage(int k, int d, int r) {
  check_k(k);
  if (r < 1 || d % r != 0) throw std::invalid_argument("distinguish_advantage: r must divide d");
  Advantage adv;
  adv.l1 = l1_distance(schur(k, d), schur(k, d / r));
  adv.success = Rat(1, 2) + adv.l1 / 4;
  return adv;
}

}  // namespace schurlab
