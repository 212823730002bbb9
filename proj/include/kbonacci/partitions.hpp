#pragma once

#include <vector>

#include "kbonacci/bigint.hpp"
#include "kbonacci/errors.hpp"

namespace kbonacci {

// Exponent vector (a1..ak) with weight sum j*a_j; part j is used a_j times.
struct WeightedPartition {
  std::vector<int> parts;

  Index weight() const;  // sum j * a_j
  Index size() const;    // sum a_j  (written |a|)
};

// All solutions of sum j*a_j = n with a_j >= 0 and parts up to k, each
// exactly once, in ascending lexicographic order on (a1..ak).
std::vector<WeightedPartition> enumerate_partitions(Index n, int k);

// |a|! / (a1! ... ak!), exact.
Int multinomial(const WeightedPartition& a);

// C(n, r) with the convention C(n, r) = 0 when r < 0 or n < r.
Int binomial(Index n, Index r);

// Combinatorial (partition-sum) backends for the integer sequences. Each
// equals its recurrence counterpart exactly on n >= 1. Inner terms whose
// sequence index falls at or below 1-k are served by the boundary table /
// backward extension, which is where the closed forms stop representing the
// sequences; the partition sums proper carry every index above that line.
Int fib_combinatorial(int k, int branch, Index n);

// Branch-k Fibonacci value f_k(n - i_shift) as a hook-weighted sum over
// partitions of n - i_shift + k - 1; each term weighted by m_k/|m|.
Int lemma_2_16_fib(int k, Index n, Index i_shift);

Int lucas_combinatorial_2_17(int k, int branch, Index n);
Int lucas_combinatorial_2_18(int k, int branch, Index n);
Int lucas_combinatorial_2_19(int k, int branch, Index n);

// Ordinary Lucas numbers as a pure binomial double sum (k = 2).
Int lucas2_binomial(Index n);

}  // namespace kbonacci
