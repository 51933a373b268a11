#pragma once

#include "schurlab/characters.hpp"

#include <Eigen/Dense>

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace schurlab {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

enum class Family { Cyclic, Dihedral, Sym, WreathS2 };

/// A finite group given by its multiplication table.  Element 0 is the
/// identity.  Orderings are fixed per family:
///   cyclic:N    0,1,...,N-1 (element j is the rotation by j)
///   dihedral:N  rotations r^0..r^{N-1}, then reflections s r^0..s r^{N-1}
///   sym:n       permutations of {0..n-1} in lexicographic order
///   wreath_s2:n ((a,b),eps) ordered by eps, then a, then b (lex on S_n)
class FiniteGroup {
 public:
  int order() const { return order_; }
  int mult(int a, int b) const { return mult_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return 0; }
  Family family() const { return family_; }
  int param() const { return param_; }
  const std::string& name() const { return name_; }

  /// Conjugacy classes as element index lists; class 0 is {identity}.
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }

  friend FiniteGroup make_group(const std::string& spec);

 private:
  int order_ = 0;
  Family family_{};
  int param_ = 0;
  std::string name_;
  std::vector<int> mult_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

/// Parse "family:param" (cyclic:N, dihedral:N, sym:n, wreath_s2:n) and
/// build the multiplication table.
FiniteGroup make_group(const std::string& spec);

struct Subgroup {
  std::vector<int> elements;  // sorted indices, contains 0
  int order() const { return static_cast<int>(elements.size()); }
};

/// All subgroups by closure of generator sets, sorted by (order, elements).
std::vector<Subgroup> subgroups(const FiniteGroup& G);

/// Closure of a generator set.
Subgroup subgroup_from_generators(const FiniteGroup& G, const std::vector<int>& gens);

/// Parse a subgroup spec: "trivial", "full", "reflection:j" (dihedral),
/// "gen:i,j,..." (element indices) or "gen:(12)(34)" (cycles, sym only).
Subgroup parse_subgroup(const FiniteGroup& G, const std::string& spec);

struct CharacterTable {
  std::vector<std::string> labels;          // one per irrep
  std::vector<int> dims;                    // dim V_sigma
  std::vector<std::vector<Complex>> chars;  // [irrep][class]
  int d_max = 0;
};

CharacterTable character_table(const FiniteGroup& G);

enum class Side { Left, Right };

/// Permutation matrix of the regular representation.
/// Right: R(g)|g'> = |g' g^{-1}>.  Left: L(g)|g'> = |g g'>.
Matrix regular_rep(const FiniteGroup& G, Side side, int g);

/// Pi_sigma = (dim V_sigma / |G|) sum_g conj(chi_sigma(g)) L(g);
/// Hermitian idempotent of rank (dim V_sigma)^2.
Matrix isotypic_projector(const FiniteGroup& G, const CharacterTable& table, int sigma);

/// rho_H = (1/|G|) sum_{h in H} R(h).
Matrix hidden_subgroup_state(const FiniteGroup& G, const Subgroup& H);

/// Pr(sigma) = (dim V_sigma / |G|) sum_{h in H} conj(chi_sigma(h)).
double fourier_probability(const FiniteGroup& G, const CharacterTable& table,
                           const Subgroup& H, int sigma);

/// Permutation index mapping of sym:n elements to cycle types, used by
/// the character table construction.
Partition cycle_type_of_permutation(const std::vector<int>& perm);

}  // namespace schurlab
