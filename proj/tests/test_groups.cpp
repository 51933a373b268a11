#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurlab/groups.hpp"

#include <algorithm>
#include <cmath>

using namespace schurlab;

namespace {

const char* kSmallGroups[] = {"cyclic:5", "cyclic:6", "dihedral:3",
                              "dihedral:4", "sym:3", "sym:4", "wreath_s2:2"};

void check_group_axioms(const FiniteGroup& G) {
  const int n = G.order();
  for (int a = 0; a < n; ++a) {
    CHECK(G.mult(a, 0) == a);
    CHECK(G.mult(0, a) == a);
    CHECK(G.mult(a, G.inv(a)) == 0);
    CHECK(G.mult(G.inv(a), a) == 0);
  }
  // associativity on a subsample
  for (int a = 0; a < n; a += 2)
    for (int b = 0; b < n; b += 3)
      for (int c = 0; c < n; c += 2)
        CHECK(G.mult(G.mult(a, b), c) == G.mult(a, G.mult(b, c)));
  // classes partition the group
  int covered = 0;
  for (const auto& cls : G.classes()) covered += static_cast<int>(cls.size());
  CHECK(covered == n);
  CHECK(G.classes()[0] == std::vector<int>{0});
}

}  // namespace

TEST_CASE("orders and axioms") {
  CHECK(make_group("cyclic:7").order() == 7);
  CHECK(make_group("dihedral:5").order() == 10);
  CHECK(make_group("sym:4").order() == 24);
  CHECK(make_group("wreath_s2:2").order() == 8);
  CHECK(make_group("wreath_s2:3").order() == 72);
  for (const char* spec : kSmallGroups) check_group_axioms(make_group(spec));
}

TEST_CASE("spec parsing errors") {
  CHECK_THROWS(make_group("sym"));
  CHECK_THROWS(make_group("icosahedral:5"));
  CHECK_THROWS(make_group("cyclic:0"));
  CHECK_THROWS(make_group("sym:5"));  // order 120 over the cap
}

TEST_CASE("class counts") {
  CHECK(make_group("cyclic:6").classes().size() == 6);
  CHECK(make_group("dihedral:3").classes().size() == 3);
  CHECK(make_group("dihedral:4").classes().size() == 5);
  CHECK(make_group("sym:4").classes().size() == 5);
}

TEST_CASE("character table orthogonality") {
  for (const char* spec : kSmallGroups) {
    const FiniteGroup G = make_group(spec);
    const CharacterTable t = character_table(G);
    CHECK(t.labels.size() == G.classes().size());
    int sum_sq = 0, dmax = 0;
    for (int d : t.dims) {
      sum_sq += d * d;
      dmax = std::max(dmax, d);
    }
    CHECK(sum_sq == G.order());
    CHECK(t.d_max == dmax);
    const int M = static_cast<int>(t.dims.size());
    for (int a = 0; a < M; ++a) {
      CHECK(std::abs(t.chars[a][0] - Complex(t.dims[a], 0)) < 1e-9);
      for (int b = 0; b < M; ++b) {
        Complex dot = 0;
        for (std::size_t c = 0; c < G.classes().size(); ++c)
          dot += static_cast<double>(G.classes()[c].size()) * t.chars[a][c] *
                 std::conj(t.chars[b][c]);
        CHECK(std::abs(dot - (a == b ? Complex(G.order(), 0) : Complex(0, 0))) < 1e-8);
      }
    }
  }
}

TEST_CASE("characters are class functions of the regular representation") {
  for (const char* spec : {"dihedral:4", "sym:3", "wreath_s2:2"}) {
    const FiniteGroup G = make_group(spec);
    const CharacterTable t = character_table(G);
    // tr L(g) counts fixed points: |G| at identity, 0 elsewhere; decomposing,
    // sum_sigma dim_sigma chi_sigma(g) must reproduce that
    for (std::size_t c = 0; c < G.classes().size(); ++c) {
      Complex s = 0;
      for (std::size_t a = 0; a < t.dims.size(); ++a)
        s += static_cast<double>(t.dims[a]) * t.chars[a][c];
      CHECK(std::abs(s - (c == 0 ? Complex(G.order(), 0) : Complex(0, 0))) < 1e-8);
    }
  }
}

TEST_CASE("regular representation is a homomorphism") {
  const FiniteGroup G = make_group("dihedral:3");
  for (Side side : {Side::Left, Side::Right})
    for (int g = 0; g < G.order(); ++g)
      for (int h = 0; h < G.order(); ++h) {
        const Matrix lhs = regular_rep(G, side, g) * regular_rep(G, side, h);
        const Matrix rhs = regular_rep(G, side, G.mult(g, h));
        CHECK((lhs - rhs).norm() < 1e-12);
      }
}

TEST_CASE("left and right actions commute") {
  const FiniteGroup G = make_group("sym:3");
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      const Matrix L = regular_rep(G, Side::Left, g);
      const Matrix R = regular_rep(G, Side::Right, h);
      CHECK((L * R - R * L).norm() < 1e-12);
    }
}

TEST_CASE("isotypic projectors") {
  for (const char* spec : kSmallGroups) {
    const FiniteGroup G = make_group(spec);
    const CharacterTable t = character_table(G);
    const int n = G.order();
    Matrix sum = Matrix::Zero(n, n);
    std::vector<Matrix> projs;
    for (std::size_t s = 0; s < t.dims.size(); ++s) {
      const Matrix P = isotypic_projector(G, t, static_cast<int>(s));
      CHECK((P - P.adjoint()).norm() < 1e-9);
      CHECK((P * P - P).norm() < 1e-9);
      CHECK(std::abs(P.trace().real() - t.dims[s] * t.dims[s]) < 1e-9);
      sum += P;
      projs.push_back(P);
    }
    CHECK((sum - Matrix::Identity(n, n)).norm() < 1e-9);
    for (std::size_t a = 0; a < projs.size(); ++a)
      for (std::size_t b = a + 1; b < projs.size(); ++b)
        CHECK((projs[a] * projs[b]).norm() < 1e-9);
  }
}

TEST_CASE("subgroup lattices") {
  CHECK(subgroups(make_group("cyclic:12")).size() == 6);  // one per divisor
  CHECK(subgroups(make_group("sym:3")).size() == 6);
  CHECK(subgroups(make_group("dihedral:2")).size() == 5);  // Klein four group
  const FiniteGroup G = make_group("sym:4");
  CHECK(subgroups(G).size() == 30);
  for (const auto& H : subgroups(G)) {
    CHECK(G.order() % H.order() == 0);  // Lagrange
    for (int a : H.elements)
      for (int b : H.elements) {
        const int ab = G.mult(a, b);
        CHECK(std::find(H.elements.begin(), H.elements.end(), ab) != H.elements.end());
      }
  }
}

TEST_CASE("subgroup parsing") {
  const FiniteGroup S3 = make_group("sym:3");
  CHECK(parse_subgroup(S3, "trivial").order() == 1);
  CHECK(parse_subgroup(S3, "full").order() == 6);
  CHECK(parse_subgroup(S3, "gen:(12)").order() == 2);
  CHECK(parse_subgroup(S3, "gen:(123)").order() == 3);
  const FiniteGroup D4 = make_group("dihedral:4");
  const Subgroup refl = parse_subgroup(D4, "reflection:1");
  CHECK(refl.order() == 2);
  CHECK_THROWS(parse_subgroup(S3, "reflection:0"));
  CHECK_THROWS(parse_subgroup(S3, "gen:(15)"));
}

TEST_CASE("hidden subgroup state") {
  for (const char* spec : {"cyclic:8", "dihedral:4", "sym:3", "sym:4"}) {
    const FiniteGroup G = make_group(spec);
    for (const auto& H : subgroups(G)) {
      const Matrix rho = hidden_subgroup_state(G, H);
      CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
      CHECK((rho - rho.adjoint()).norm() < 1e-12);
      const double scale = static_cast<double>(H.order()) / G.order();
      CHECK((rho * rho - scale * rho).norm() < 1e-12);
      // scaled projector of rank |G|/|H|
      CHECK(std::abs((rho * rho).trace().real() - scale) < 1e-12);
    }
  }
}

TEST_CASE("fourier probabilities") {
  const FiniteGroup S3 = make_group("sym:3");
  const CharacterTable t = character_table(S3);
  const Subgroup H = parse_subgroup(S3, "gen:(12)");
  // trivial 1/3, two-dimensional 2/3, sign 0
  double by_dim[3] = {0, 0, 0};
  for (std::size_t s = 0; s < t.dims.size(); ++s) {
    const double p = fourier_probability(S3, t, H, static_cast<int>(s));
    if (t.dims[s] == 2) {
      by_dim[2] = p;
    } else if (std::abs(t.chars[s][1] - Complex(1, 0)) < 1e-9 &&
               std::abs(t.chars[s][2] - Complex(1, 0)) < 1e-9) {
      by_dim[0] = p;  // trivial
    } else {
      by_dim[1] = p;  // sign
    }
  }
  CHECK(by_dim[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(by_dim[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(by_dim[2] == doctest::Approx(2.0 / 3).epsilon(1e-12));
}

TEST_CASE("fourier probability properties") {
  for (const char* spec : kSmallGroups) {
    const FiniteGroup G = make_group(spec);
    const CharacterTable t = character_table(G);
    for (const auto& H : subgroups(G)) {
      const Matrix rho = hidden_subgroup_state(G, H);
      double total = 0;
      for (std::size_t s = 0; s < t.dims.size(); ++s) {
        const double p = fourier_probability(G, t, H, static_cast<int>(s));
        CHECK(p >= -1e-12);
        total += p;
        // character formula matches the projector trace
        const Matrix P = isotypic_projector(G, t, static_cast<int>(s));
        CHECK(std::abs(p - (P * rho).trace().real()) < 1e-9);
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
      // trivial subgroup samples Plancherel over the dual
      if (H.order() == 1)
        for (std::size_t s = 0; s < t.dims.size(); ++s)
          CHECK(fourier_probability(G, t, H, static_cast<int>(s)) ==
                doctest::Approx(static_cast<double>(t.dims[s] * t.dims[s]) / G.order())
                    .epsilon(1e-12));
    }
  }
}

TEST_CASE("cycle types") {
  CHECK(cycle_type_of_permutation({0, 1, 2}) == Partition({1, 1, 1}));
  CHECK(cycle_type_of_permutation({1, 0, 2}) == Partition({2, 1}));
  CHECK(cycle_type_of_permutation({1, 2, 0}) == Partition({3}));
  CHECK(cycle_type_of_permutation({1, 0, 3, 2}) == Partition({2, 2}));
}
