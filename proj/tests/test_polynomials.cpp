#include <doctest.h>

#include <vector>

#include "kbonacci/partitions.hpp"
#include "kbonacci/polynomials.hpp"
#include "kbonacci/sequences.hpp"

using namespace kbonacci;

namespace {

SparsePolynomial from_terms(int k, std::vector<std::pair<std::vector<int>, long long>> terms) {
  SparsePolynomial p(k);
  for (auto& [e, c] : terms) p.add_term(e, Int(c));
  return p;
}

}  // namespace

TEST_CASE("fib_poly base cases and small expansions") {
  CHECK(fib_poly(2, -1).is_zero());
  CHECK(fib_poly(2, 0) == from_terms(2, {{{0, 0}, 1}}));
  CHECK(fib_poly(2, 1) == from_terms(2, {{{1, 0}, 1}}));
  CHECK(fib_poly(2, 3) == from_terms(2, {{{3, 0}, 1}, {{1, 1}, 2}}));
  CHECK(fib_poly(2, 4) == from_terms(2, {{{4, 0}, 1}, {{2, 1}, 3}, {{0, 2}, 1}}));
  CHECK(fib_poly(3, 3) == from_terms(3, {{{3, 0, 0}, 1}, {{1, 1, 0}, 2}, {{0, 0, 1}, 1}}));
}

TEST_CASE("lucas_poly base cases and small expansions") {
  CHECK(lucas_poly(3, -2).is_zero());
  CHECK(lucas_poly(3, 0) == from_terms(3, {{{0, 0, 0}, 3}}));
  CHECK(lucas_poly(2, 1) == from_terms(2, {{{1, 0}, 1}}));
  CHECK(lucas_poly(2, 2) == from_terms(2, {{{2, 0}, 1}, {{0, 1}, 2}}));
  CHECK(lucas_poly(3, 2) == from_terms(3, {{{2, 0, 0}, 1}, {{0, 1, 0}, 2}}));
  CHECK(lucas_poly(2, 4) == from_terms(2, {{{4, 0}, 1}, {{2, 1}, 4}, {{0, 2}, 2}}));
  CHECK(lucas_poly(3, 3) == from_terms(3, {{{3, 0, 0}, 1}, {{1, 1, 0}, 3}, {{0, 0, 1}, 3}}));
}

TEST_CASE("partition closed forms match the recurrences term for term") {
  for (int k = 2; k <= 4; ++k)
    for (Index n = 0; n <= 14; ++n) {
      CHECK(fib_poly(k, n) == fib_poly_partition(k, n));
      if (n >= 1) CHECK(lucas_poly(k, n) == lucas_poly_partition(k, n));
    }
  CHECK(lucas_poly_partition(3, 0) == from_terms(3, {{{0, 0, 0}, 3}}));
}

TEST_CASE("binomial form of the order-2 family") {
  CHECK(fib2_combinatorial(0) == from_terms(2, {{{0, 0}, 1}}));
  CHECK(fib2_combinatorial(2) == from_terms(2, {{{2, 0}, 1}, {{0, 1}, 1}}));
  CHECK(fib2_combinatorial(4) == from_terms(2, {{{4, 0}, 1}, {{2, 1}, 3}, {{0, 2}, 1}}));
  for (Index n = 0; n <= 20; ++n) CHECK(fib2_combinatorial(n) == fib_poly(2, n));
}

TEST_CASE("evaluation") {
  CHECK(eval_poly(fib_poly(2, 3), CoefficientVector::ones(2)) == 3);
  CHECK(eval_poly(lucas_poly(2, 4), CoefficientVector::ones(2)) == 7);
  CHECK(eval_poly(fib_poly(3, 6), CoefficientVector::from_ints({0, 0, 0})) == 0);
  CHECK(eval_poly(lucas_poly(3, 0), CoefficientVector::from_ints({0, 0, 0})) == 3);
  CHECK_THROWS_AS(eval_poly(fib_poly(3, 2), CoefficientVector::ones(2)), dimension_mismatch);

  // all-ones evaluation reduces both families to the branch-k sequences
  for (int k = 2; k <= 5; ++k) {
    const auto ones = CoefficientVector::ones(k);
    for (Index n = 0; n <= 20; ++n) {
      CHECK(eval_poly(fib_poly(k, n), ones) == kso_fib(k, ones, k, n + 1));
      CHECK(eval_poly(lucas_poly(k, n), ones) == kso_lucas(k, k, n));
    }
  }
}

TEST_CASE("theorem_2_7_residual vanishes") {
  CHECK(theorem_2_7_residual(2, 2).is_zero());
  CHECK(theorem_2_7_residual(3, 0).is_zero());
  CHECK(theorem_2_7_residual(4, 6).is_zero());
  for (int k = 2; k <= 4; ++k)
    for (Index n = 0; n <= 12; ++n) CHECK(theorem_2_7_residual(k, n).is_zero());
}

TEST_CASE("coefficients are positive and never stored at zero") {
  for (int k = 2; k <= 4; ++k)
    for (Index n = 0; n <= 14; ++n) {
      const auto f = fib_poly(k, n);
      const auto g = lucas_poly(k, n);
      for (const auto& [exp, coef] : f.terms()) CHECK(coef > 0);
      for (const auto& [exp, coef] : g.terms()) CHECK(coef > 0);
    }
  const auto diff = fib_poly(3, 9) - fib_poly_partition(3, 9);
  CHECK(diff.is_zero());
  CHECK(diff.terms().empty());
}

TEST_CASE("graded-lex ordering drives rendering and serialization") {
  const auto p = lucas_poly(2, 4);
  CHECK(p.to_plain_string() == "t1^4 + 4*t1^2*t2 + 2*t2^2");
  CHECK(p.to_json_string() ==
        R"({"k":2,"terms":[{"exp":[4,0],"coef":"1"},{"exp":[2,1],"coef":"4"},{"exp":[0,2],"coef":"2"}]})");
  CHECK(SparsePolynomial(2).to_plain_string() == "0");
  CHECK(fib_poly(2, 1).to_plain_string() == "t1");
  CHECK(fib_poly(2, 0).to_plain_string() == "1");

  // same total degree: lexicographically larger exponent vector first
  const auto q = fib_poly(3, 4);
  std::vector<std::vector<int>> order;
  for (const auto& [exp, coef] : q.terms()) order.push_back(exp);
  const std::vector<std::vector<int>> expected = {{4, 0, 0}, {2, 1, 0}, {1, 0, 1}, {0, 2, 0}};
  CHECK(order == expected);

  const auto r = theorem_2_7_residual(2, 5) - fib_poly(2, 2);
  CHECK(r.to_plain_string() == "-t1^2 - t2");
}

TEST_CASE("arithmetic closes over the representation") {
  const auto a = fib_poly(3, 5);
  const auto b = lucas_poly(3, 4);
  CHECK((a + b) - b == a);
  CHECK(a.scaled(Int(0)).is_zero());
  CHECK(a.scaled(Int(3)) == a + a + a);
  const auto shifted = a.times_variable(2);
  for (const auto& [exp, coef] : shifted.terms()) CHECK(exp[1] >= 1);
  CHECK_THROWS_AS(a.times_variable(4), dimension_mismatch);
  CHECK_THROWS_AS(fib_poly(1, 2), invalid_order);
}
