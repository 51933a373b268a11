#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace schurlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
// 50 decimal digits; used wherever square roots enter a bound check.
using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Rat& r);
double to_double(const Rat& r);
Int factorial(int n);

/// A partition of k: weakly decreasing positive parts.  The empty
/// partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int k() const;
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;  // 0-based row, 0 past the end

  Partition transpose() const;
  Int content_sum() const;  // sum of j - i over cells (1-based)

  /// Hook length of the (row, col) cell, 1-based coordinates.
  int hook(int row, int col) const;

  std::string to_string() const;  // e.g. "(3,1,1)"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// All partitions of k in reverse-lexicographic order, the canonical
/// order for every distribution in this library.  max_rows < 0 means
/// unrestricted.
std::vector<Partition> enumerate_partitions(int k, int max_rows = -1);

/// Number of standard Young tableaux of shape lambda (hook length formula).
Int dim_sym_irrep(const Partition& lambda);

/// dim of the U(d) irrep with highest weight lambda (Stanley's
/// content-product form); 0 when lambda has more than d rows.
Int dim_unitary_irrep(const Partition& lambda, int d);

/// Exhaustive SYT count; test oracle for dim_sym_irrep.  Rejects k > 10.
Int count_syt_bruteforce(const Partition& lambda);

}  // namespace schurlab
