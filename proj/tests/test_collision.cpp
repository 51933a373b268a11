#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurlab/collision.hpp"

#include <cmath>
#include <random>

using namespace schurlab;

namespace {

Vector random_unit(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

SwapTestInstance random_instance(int m, int dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nb_dist(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::normal_distribution<double> gauss;
  SwapTestInstance inst;
  inst.m = m;
  inst.dim = dim;
  const int nb = nb_dist(rng);
  double norm = 0;
  for (int i = 0; i < nb; ++i) {
    SwapBranch b;
    b.amplitude = Complex(gauss(rng), gauss(rng));
    norm += std::norm(b.amplitude);
    b.alpha = random_unit(dim, rng);
    b.theta = coin(rng);
    if (b.theta == 1) {
      b.beta = b.alpha;
    } else {
      Vector w = random_unit(dim, rng);
      w -= b.alpha.dot(w) * b.alpha;
      b.beta = w / w.norm();
    }
    inst.branches.push_back(std::move(b));
  }
  for (auto& b : inst.branches) b.amplitude /= std::sqrt(norm);
  return inst;
}

}  // namespace

TEST_CASE("amplified swap unitary structure") {
  for (auto [m, dim] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 2},
                        std::pair{1, 3}, std::pair{2, 3}}) {
    const Matrix U = amplified_swap_unitary(m, dim);
    const long long n = U.rows();
    CHECK((U * U - Matrix::Identity(n, n)).norm() < 1e-9);       // involution
    CHECK((U * U.adjoint() - Matrix::Identity(n, n)).norm() < 1e-9);
    CHECK((U - U.adjoint()).norm() < 1e-9);  // 1 - 2Pi is Hermitian
  }
  // m = 1 reduces to minus the swap
  const Matrix U = amplified_swap_unitary(1, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(std::abs(U(b * 2 + a, a * 2 + b) + 1.0) < 1e-12);
  CHECK_THROWS(amplified_swap_unitary(4, 3));  // 3^8 over cap
}

TEST_CASE("equal-state branches are fixed up to sign") {
  std::mt19937_64 rng(3);
  const int m = 2, dim = 2;
  const Matrix U = amplified_swap_unitary(m, dim);
  const Vector a = random_unit(dim, rng);
  Vector psi = Vector::Ones(1);
  for (int c = 0; c < 2 * m; ++c) {
    Vector next(psi.size() * dim);
    for (long long x = 0; x < psi.size(); ++x)
      for (int j = 0; j < dim; ++j) next[x * dim + j] = psi[x] * a[j];
    psi = std::move(next);
  }
  CHECK((U * psi + psi).norm() < 1e-9);  // eigenvector with eigenvalue -1
}

TEST_CASE("single-branch fidelities") {
  std::mt19937_64 rng(5);
  SwapTestInstance inst;
  inst.m = 3;
  inst.dim = 2;
  SwapBranch b;
  b.amplitude = 1.0;
  b.alpha = random_unit(2, rng);
  b.beta = b.alpha;
  b.theta = 1;
  inst.branches = {b};
  CHECK(swap_fidelity(inst).fidelity == doctest::Approx(1.0).epsilon(1e-12));

  // orthogonal pair at m = 3: (1 - 2^{-2})^2 = 9/16
  b.beta = Vector::Zero(2);
  b.beta[0] = std::conj(b.alpha[1]);
  b.beta[1] = -std::conj(b.alpha[0]);
  b.theta = 0;
  inst.branches = {b};
  const auto f = swap_fidelity(inst);
  CHECK(f.fidelity == doctest::Approx(9.0 / 16).epsilon(1e-12));
  CHECK(f.exact_formula == doctest::Approx(9.0 / 16).epsilon(1e-12));
  CHECK(f.bound == doctest::Approx(1.0 - 0.5).epsilon(1e-12));
}

TEST_CASE("two-branch mixed case") {
  std::mt19937_64 rng(6);
  SwapTestInstance inst;
  inst.m = 4;
  inst.dim = 2;
  SwapBranch b1, b2;
  b1.amplitude = b2.amplitude = 1.0 / std::sqrt(2.0);
  b1.alpha = b1.beta = random_unit(2, rng);
  b1.theta = 1;
  b2.alpha = random_unit(2, rng);
  Vector w = random_unit(2, rng);
  w -= b2.alpha.dot(w) * b2.alpha;
  b2.beta = w / w.norm();
  b2.theta = 0;
  inst.branches = {b1, b2};
  const auto f = swap_fidelity(inst);
  // |1 - (1/2) 2^{1-4}|^2 = (15/16)^2
  CHECK(f.exact_formula == doctest::Approx(225.0 / 256).epsilon(1e-12));
  CHECK(f.fidelity == doctest::Approx(225.0 / 256).epsilon(1e-9));
}

TEST_CASE("randomized instances meet the formula and the bound") {
  std::mt19937_64 rng(42);
  for (int m = 2; m <= 5; ++m) {
    const double bound = 1.0 - std::pow(2.0, 2 - m);
    for (int rep = 0; rep < 200; ++rep) {
      const auto inst = random_instance(m, 2, rng);
      const auto f = swap_fidelity(inst);
      CHECK(std::abs(f.fidelity - f.exact_formula) < 1e-9);
      CHECK(f.fidelity >= bound - 1e-12);
    }
  }
}

TEST_CASE("error accumulation") {
  CHECK(error_accumulation(0, 4, 0.25) == doctest::Approx(0.25));
  CHECK(error_accumulation(4, 14, 0.0) == doctest::Approx(1.0 / 16));
  CHECK_THROWS(error_accumulation(-1, 4, 0.0));
}

TEST_CASE("collision plans") {
  const auto p = plan_collision_algorithm(512, 8);
  CHECK(p.table_size == 4);
  CHECK(p.m == 14);
  CHECK(p.grover_iters == 4);
  CHECK(p.total_queries == 168);

  const auto q = plan_collision_algorithm(16, 2);  // d/r = 8
  CHECK(q.table_size == 2);
  CHECK(q.m == 8);
  CHECK(q.grover_iters == 2);
  CHECK(q.total_queries == 48);

  const auto b = plan_collision_algorithm(4, 2);  // boundary d/r = 2
  CHECK(b.table_size == 1);
  CHECK(b.m == 4);
  CHECK(b.grover_iters == 2);
  CHECK(b.total_queries == 20);

  CHECK_THROWS(plan_collision_algorithm(10, 3));
  CHECK_THROWS(plan_collision_algorithm(4, 4));
}

TEST_CASE("plan totals scale like the cube root times the log") {
  for (int ratio : {8, 64, 512, 4096}) {
    const auto p = plan_collision_algorithm(2 * ratio, 2);
    const double scale = std::cbrt(static_cast<double>(ratio)) *
                         std::log2(static_cast<double>(ratio));
    const double c = static_cast<double>(p.total_queries) / scale;
    CHECK(c >= 1.0);
    CHECK(c <= 8.0);
  }
}

TEST_CASE("grover iteration counts") {
  CHECK(grover_iterations_unknown_input(5, 5) == 1);
  CHECK(grover_iterations_unknown_input(512, 8) == 5);
  CHECK(grover_iterations_unknown_input(1000, 1) == 12);
}

TEST_CASE("monte carlo collision") {
  const auto one = montecarlo_collision(64, 4, 500, 42, CollisionCase::OneToOne);
  CHECK(one.success_rate == 0.0);  // a 1-to-1 f never collides with the table

  const auto many = montecarlo_collision(64, 4, 10000, 42, CollisionCase::RToOne);
  CHECK(many.success_rate > 0.5);
  CHECK(many.trials == 10000);
  CHECK(many.seed == 42);

  // deterministic given the seed
  const auto again = montecarlo_collision(64, 4, 10000, 42, CollisionCase::RToOne);
  CHECK(again.success_rate == many.success_rate);
  CHECK(again.mean_queries == many.mean_queries);
  const auto other = montecarlo_collision(64, 4, 10000, 43, CollisionCase::RToOne);
  CHECK(other.success_rate != many.success_rate);
}

TEST_CASE("success gap across the two hypotheses") {
  for (auto [d, r] : {std::pair{32, 2}, std::pair{128, 2}}) {  // d/r = 16, 64
    const auto a = montecarlo_collision(d, r, 10000, 7, CollisionCase::OneToOne);
    const auto b = montecarlo_collision(d, r, 10000, 7, CollisionCase::RToOne);
    CHECK(b.success_rate - a.success_rate >= 0.2);
  }
}
