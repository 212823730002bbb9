#pragma once

#include <complex>
#include <vector>

#include "kbonacci/bigint.hpp"
#include "kbonacci/errors.hpp"
#include "kbonacci/sequences.hpp"

namespace kbonacci {

// Roots of the core polynomial x^k - t1 x^(k-1) - ... - tk. residual_bound
// is max |P(root)| over the set; distinct records the pairwise-separation
// test. Closed-form evaluation is refused when distinct is false.
struct RootSet {
  int k = 0;
  std::vector<std::complex<double>> roots;
  double residual_bound = 0.0;
  bool distinct = false;
};

struct ApproxValue {
  double value = 0.0;
  double abs_error_estimate = 0.0;
};

// Indices past this cap would push |root|^n toward the limits of double
// range and accuracy; the exact backends cover large n.
inline constexpr Index binet_index_cap = 200;

// Simultaneous (Aberth-Ehrlich) iteration from perturbed-circle starting
// points; converges when the largest correction drops below 1e-14, capped at
// 200 rounds. Residuals above 1e-12 * (1 + max|t|) fail the computation.
RootSet core_roots(int k, const CoefficientVector& t);

// Closed-form branch-k Fibonacci value at index n for all-ones coefficients:
// a sum of root powers weighted by reciprocal derivative values. The root
// power is offset by k-2 so that the result lines up with kso_fib(k,1s,k,n)
// for every k (the plain power matches only at k = 2).
ApproxValue binet_fib(const RootSet& rs, Index n);
ApproxValue binet_fib(int k, Index n);

// Same value as a ratio of determinants: the Vandermonde matrix of the
// roots with its top power row replaced by the offset powers, over the
// plain Vandermonde determinant. Complex LU with partial pivoting.
ApproxValue vandermonde_fib(const RootSet& rs, Index n);
ApproxValue vandermonde_fib(int k, Index n);

// Branch-i Lucas values as j-weighted sums of the Fibonacci closed forms,
// split by branch position (i = 1, 1 < i < k, i = k).
ApproxValue binet_lucas(const RootSet& rs, int branch, Index n);
ApproxValue binet_lucas(int k, int branch, Index n);
ApproxValue vandermonde_lucas(const RootSet& rs, int branch, Index n);
ApproxValue vandermonde_lucas(int k, int branch, Index n);

}  // namespace kbonacci
