#pragma once

#include <vector>

#include "kbonacci/bigint.hpp"
#include "kbonacci/errors.hpp"
#include "kbonacci/sequences.hpp"

namespace kbonacci {

// Dense matrix of arbitrary-precision integers. Value type, schoolbook
// multiplication; orders stay small (k <= 16) so nothing fancier is needed.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);
  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return entries_[index(r, c)]; }
  const Int& at(int r, int c) const { return entries_[index(r, c)]; }

  ExactMatrix operator*(const ExactMatrix& rhs) const;
  bool operator==(const ExactMatrix& rhs) const = default;
  Int trace() const;

 private:
  size_t index(int r, int c) const;
  int rows_ = 0, cols_ = 0;
  std::vector<Int> entries_;
};

// Two companion forms are in play and they are not interchangeable:
//
//   companion(k, c)        coefficient row on top, identity subdiagonal.
//                          Powers of it are the f_tilde windows; it also
//                          drives the l_tilde lemmas.
//   orbit_companion(k, t)  reversed coefficient row (tk..t1) at the bottom,
//                          identity superdiagonal. Right-multiplication by it
//                          steps the infinite-window orbits, and its power
//                          traces give the Lucas polynomial values.
ExactMatrix companion(int k, const CoefficientVector& c);
ExactMatrix orbit_companion(int k, const CoefficientVector& t);

// Exact m^n by repeated squaring, O(log n) multiplications; m^0 = identity.
ExactMatrix mat_power(const ExactMatrix& m, Index n);

// k x k window with entry (r, i) = branch-(i+1) Fibonacci value at n - r.
// Equals mat_power(companion(k, c), n) for n >= 0.
ExactMatrix f_tilde(int k, const CoefficientVector& c, Index n);

// Explicit boundary matrix of the Lucas family: entry (r, i) with 1-indexed
// branch i is -i if i+r < k, 2r+i if i+r = k, and k-i-1 otherwise.
ExactMatrix l_tilde_0(int k);

// k x k window with entry (r, i) = branch-(i+1) Lucas value at n - r.
// Satisfies l_tilde(k, n) = f_tilde(k, 1s, n) * l_tilde_0(k).
ExactMatrix l_tilde(int k, Index n);

// Contiguous rows [row_lo, row_hi] of a doubly infinite orbit matrix:
// consecutive rows are images of each other under right-multiplication by
// orbit_companion(k, t). Rows below the seed need tk != 0 and exact division.
struct InfiniteMatrixWindow {
  int k = 0;
  CoefficientVector t;
  Index row_lo = 0, row_hi = 0;
  std::vector<std::vector<Int>> rows;  // rows[i] is the row at index row_lo + i

  const std::vector<Int>& row(Index n) const;
};

// Orbit of the unit vector e_k, anchored so that rows 1-k..0 are the
// identity block; the right-hand column of row n carries the Fibonacci
// polynomial value F(k,n)(t).
InfiniteMatrixWindow a_infty_window(int k, const CoefficientVector& t, Index row_lo, Index row_hi);

// Orbit of the derivative coefficient vector (-tk-1, -2tk-2, ..., -(k-1)t1, k)
// of the core polynomial, anchored at row 0; the right-hand column of row n
// carries the Lucas polynomial value G(k,n)(t).
InfiniteMatrixWindow d_infty_window(int k, const CoefficientVector& t, Index row_lo, Index row_hi);

std::vector<Int> orbit_step_forward(const std::vector<Int>& v, const CoefficientVector& t);
std::vector<Int> orbit_step_backward(const std::vector<Int>& v, const CoefficientVector& t);

// Hook-indexed entries of the orbit matrices: the alternating t-weighted
// sums S(n-r, 1^r) = (-1)^r sum_{j=r+1..n} t_j S(n-j), with t_j = 0 past k
// and S(0) = 1. The r = 0 case is the Fibonacci polynomial value sequence.
Int hook_schur(const CoefficientVector& t, Index n, Index r);

}  // namespace kbonacci
