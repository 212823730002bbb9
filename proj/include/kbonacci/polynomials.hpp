#pragma once

#include <map>
#include <string>
#include <vector>

#include "kbonacci/bigint.hpp"
#include "kbonacci/errors.hpp"
#include "kbonacci/sequences.hpp"

namespace kbonacci {

// Graded lexicographic term order, highest total degree first; ties broken
// by the lexicographically larger exponent vector. Fixes serialization.
struct GradedLexDesc {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Multivariate polynomial in t1..tk with exact integer coefficients, stored
// sparsely as exponent vector -> coefficient. Zero coefficients are never
// stored; every exponent vector has length k.
class SparsePolynomial {
 public:
  using TermMap = std::map<std::vector<int>, Int, GradedLexDesc>;

  explicit SparsePolynomial(int nvars = 0) : nvars_(nvars) {}
  static SparsePolynomial constant(int nvars, const Int& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const std::vector<int>& exp, const Int& coef);

  SparsePolynomial& operator+=(const SparsePolynomial& rhs);
  SparsePolynomial& operator-=(const SparsePolynomial& rhs);
  SparsePolynomial operator+(const SparsePolynomial& rhs) const;
  SparsePolynomial operator-(const SparsePolynomial& rhs) const;
  SparsePolynomial scaled(const Int& s) const;
  SparsePolynomial times_variable(int j) const;  // multiply by t_j, 1-indexed

  Int evaluate(const CoefficientVector& t) const;
  bool operator==(const SparsePolynomial& rhs) const;

  // "t1^4 + 4*t1^2*t2 + 2*t2^2" in graded-lex order; "0" for the zero poly.
  std::string to_plain_string() const;
  // {"k": k, "terms": [{"exp": [..], "coef": "decimal"}]} in graded-lex order.
  std::string to_json_string() const;

 private:
  int nvars_;
  TermMap terms_;
};

// Fibonacci polynomial family: F(k,n) = 0 for n < 0, F(k,0) = 1, and
// F(k,n+1) = t1*F(k,n) + ... + tk*F(k,n-k+1). At all-ones coefficients
// F(k,n) equals the branch-k Fibonacci value at index n+1.
SparsePolynomial fib_poly(int k, Index n);

// Lucas polynomial family: the n-th power sum of the core polynomial roots.
// G(k,0) = k and G(k,1) = t1; up to index k the recursion carries the
// Newton-identity correction term m*t_m, after which the plain k-term
// recursion takes over. Zero for n < 0, trace of the orbit companion power
// for n >= 0, and equal to the branch-k Lucas value at all-ones coefficients.
SparsePolynomial lucas_poly(int k, Index n);

// Closed forms as sums over weighted partitions of n with parts <= k:
// multinomial coefficients for F, additionally weighted by n/|a| for G.
SparsePolynomial fib_poly_partition(int k, Index n);
SparsePolynomial lucas_poly_partition(int k, Index n);

// k = 2 binomial form of F(2,n); the alternating signs collapse against the
// powers of -t2, leaving sum_j C(n-j, j) t1^(n-2j) t2^j.
SparsePolynomial fib2_combinatorial(Index n);

Int eval_poly(const SparsePolynomial& p, const CoefficientVector& t);

// G(k,n) - k*F(k,n) + sum_{j=2..k} (k-j+1) t_{j-1} F(k,n+1-j); the expected
// value is the zero polynomial.
SparsePolynomial theorem_2_7_residual(int k, Index n);

}  // namespace kbonacci
