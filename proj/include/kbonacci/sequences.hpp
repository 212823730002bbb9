#pragma once

#include <utility>
#include <vector>

#include "kbonacci/bigint.hpp"
#include "kbonacci/errors.hpp"

namespace kbonacci {

// Constant coefficients c1..ck (or t1..tk) of the degree-k recurrence
// x^k = c1*x^(k-1) + ... + ck. All-ones gives the k-bonacci family,
// (2,1,...,1) the order-k Pell preset.
struct CoefficientVector {
  std::vector<Int> values;

  CoefficientVector() = default;
  explicit CoefficientVector(std::vector<Int> v) : values(std::move(v)) {}

  static CoefficientVector ones(int k);
  static CoefficientVector from_ints(const std::vector<long long>& v);

  int order() const { return static_cast<int>(values.size()); }
  const Int& coef(int j) const { return values.at(static_cast<size_t>(j - 1)); }  // 1-indexed
  bool all_ones() const;
};

enum class Family { ksokf, ksokl, gokf, gokl };

struct SequenceSpec {
  Family family = Family::ksokf;
  int k = 2;
  int branch = 1;                  // ignored for gokf/gokl
  CoefficientVector coefficients;  // empty means all ones
};

// Branch-i sequence of the order-k Fibonacci family: the k-term recurrence
// with boundary value 1 at n = 1-i and 0 elsewhere on 1-k <= n <= 0.
// Indices below 1-k are served by exact backward extension (requires a
// nonzero trailing coefficient that divides every backward step).
Int kso_fib(int k, const CoefficientVector& c, int branch, Index n);

// Branch-i sequence of the order-k Lucas family. Coefficients are fixed at
// all ones; the boundary table on 1-k <= n <= 0 is
//   -i        if i - n < k,
//   -2n + i   if i - n = k,
//   k - i - 1 if i - n > k.
Int kso_lucas(int k, int branch, Index n);

// Single order-k Fibonacci sequence, defined for n >= 1 with seeds
// 0,...,0,1,1 on n = 1..k. Satisfies gok_fib(k, k+n-2) = kso_fib(k, 1s, k, n).
Int gok_fib(int k, Index n);

// Single order-k Lucas sequence, boundary (-1,...,-1,k) on 1-k <= n <= 0.
// Indices below the boundary extend backward unless allow_backward is false.
Int gok_lucas(int k, Index n, bool allow_backward = true);

// Contiguous values [n_lo, n_hi] computed in one pass; matches pointwise calls.
std::vector<std::pair<Index, Int>> sequence_table(const SequenceSpec& spec, Index n_lo, Index n_hi);

// Boundary tables on 1-k <= n <= 0, exposed for the matrix windows.
Int kso_fib_boundary(int k, int branch, Index n);
Int kso_lucas_boundary(int k, int branch, Index n);

}  // namespace kbonacci
