#pragma once

#include "schurlab/partition.hpp"

namespace schurlab {

/// Conjugacy class of S_k, identified by its cycle type.
struct CycleType {
  Partition cycles;
  Int class_size;
};

/// One entry per partition of k, reverse-lex order.  k <= 14.
std::vector<CycleType> conjugacy_classes(int k);

/// Exact irreducible character chi_lambda on the class with cycle type mu
/// (Murnaghan-Nakayama recursion, memoized).
long long character(const Partition& lambda, const Partition& mu);

inline long long character(const Partition& lambda, const CycleType& mu) {
  return character(lambda, mu.cycles);
}

/// C(k,2) * chi_lambda(transposition class) / dim P_lambda.  Equals the
/// content sum of lambda (Jucys).
Rat central_character_transposition(const Partition& lambda);

/// Size of the conjugacy class with the given cycle type.
Int class_size(const Partition& cycles);

}  // namespace schurlab
