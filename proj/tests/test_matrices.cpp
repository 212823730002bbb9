#include <doctest.h>

#include <vector>

#include "kbonacci/matrices.hpp"
#include "kbonacci/polynomials.hpp"
#include "kbonacci/sequences.hpp"

using namespace kbonacci;

namespace {

ExactMatrix from_rows(std::vector<std::vector<long long>> rows) {
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c)
      m.at(static_cast<int>(r), static_cast<int>(c)) = Int(rows[r][c]);
  return m;
}

// Oracle for exponentiation by squaring: plain repeated multiplication.
ExactMatrix naive_power(const ExactMatrix& m, Index n) {
  ExactMatrix acc = ExactMatrix::identity(m.rows());
  for (Index j = 0; j < n; ++j) acc = acc * m;
  return acc;
}

// all ones, (2,1,...,1), (1,2,...,k)
std::vector<Int> test_coeffs(int which, int k) {
  std::vector<Int> t(static_cast<size_t>(k), Int(1));
  if (which == 1) t[0] = 2;
  if (which == 2)
    for (int j = 0; j < k; ++j) t[static_cast<size_t>(j)] = j + 1;
  return t;
}

}  // namespace

TEST_CASE("companion shapes") {
  CHECK(companion(2, CoefficientVector::ones(2)) == from_rows({{1, 1}, {1, 0}}));
  CHECK(companion(3, CoefficientVector::ones(3)) ==
        from_rows({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}));
  CHECK(companion(2, CoefficientVector::from_ints({2, 1})) == from_rows({{2, 1}, {1, 0}}));
  CHECK(orbit_companion(2, CoefficientVector::from_ints({1, 2})) == from_rows({{0, 1}, {2, 1}}));
  CHECK(orbit_companion(3, CoefficientVector::ones(3)) ==
        from_rows({{0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
  CHECK_THROWS_AS(companion(1, CoefficientVector(std::vector<Int>{Int(1)})), invalid_order);
}

TEST_CASE("mat_power matches the repeated-multiplication oracle") {
  const auto a1 = companion(2, CoefficientVector::ones(2));
  CHECK(mat_power(a1, 0) == ExactMatrix::identity(2));
  CHECK(mat_power(a1, 5) == from_rows({{8, 5}, {5, 3}}));
  CHECK(mat_power(companion(3, CoefficientVector::ones(3)), 1) ==
        companion(3, CoefficientVector::ones(3)));

  for (int k = 2; k <= 4; ++k)
    for (int which = 0; which < 3; ++which) {
      const auto m = companion(k, CoefficientVector(test_coeffs(which, k)));
      for (Index n = 0; n <= 20; ++n) CHECK(mat_power(m, n) == naive_power(m, n));
    }

  ExactMatrix rect(2, 3);
  CHECK_THROWS_AS(mat_power(rect, 2), dimension_mismatch);
  CHECK_THROWS_AS(mat_power(ExactMatrix::identity(2), -1), index_out_of_domain);
}

TEST_CASE("f_tilde windows") {
  const auto ones2 = CoefficientVector::ones(2);
  CHECK(f_tilde(2, ones2, 1) == companion(2, ones2));
  CHECK(f_tilde(2, ones2, 0) == ExactMatrix::identity(2));
  CHECK(f_tilde(3, CoefficientVector::ones(3), 2) ==
        mat_power(companion(3, CoefficientVector::ones(3)), 2));

  // power identity holds for general coefficients too
  const auto pell = CoefficientVector::from_ints({2, 1});
  for (Index n = 0; n <= 15; ++n) CHECK(f_tilde(2, pell, n) == mat_power(companion(2, pell), n));
  for (int k = 2; k <= 5; ++k) {
    const auto ones = CoefficientVector::ones(k);
    for (Index n = 0; n <= 20; ++n) CHECK(f_tilde(k, ones, n) == mat_power(companion(k, ones), n));
  }
}

TEST_CASE("l_tilde_0 frozen matrices") {
  CHECK(l_tilde_0(2) == from_rows({{-1, 2}, {3, -1}}));
  CHECK(l_tilde_0(3) == from_rows({{-1, -2, 3}, {-1, 4, -1}, {5, 0, -1}}));
  const auto l04 = l_tilde_0(4);
  CHECK(l04.at(0, 0) == -1);
  CHECK(l04.at(0, 1) == -2);
  CHECK(l04.at(0, 2) == -3);
  CHECK(l04.at(0, 3) == 4);
}

TEST_CASE("l_tilde windows") {
  CHECK(l_tilde(2, 0) == l_tilde_0(2));
  CHECK(l_tilde(3, 0) == l_tilde_0(3));
  const auto l23 = l_tilde(2, 3);
  CHECK(l23.at(0, 1) == 4);
  CHECK(l23.at(1, 1) == 3);
  CHECK(l23 == from_rows({{3, 4}, {1, 3}}));
}

TEST_CASE("window lemmas hold entrywise") {
  for (int k = 2; k <= 5; ++k) {
    const auto ones = CoefficientVector::ones(k);
    const auto a1 = companion(k, ones);
    const auto l0 = l_tilde_0(k);
    for (Index n = 0; n <= 30; ++n) {
      CHECK(l_tilde(k, n) == f_tilde(k, ones, n) * l0);
      CHECK(l_tilde(k, n + 1) == mat_power(a1, n + 1) * l0);
    }
  }
}

TEST_CASE("trace of orbit companion powers equals the Lucas polynomial") {
  for (int k = 2; k <= 4; ++k)
    for (int which = 0; which < 3; ++which) {
      const CoefficientVector t(test_coeffs(which, k));
      const auto a = orbit_companion(k, t);
      for (Index n = 0; n <= 15; ++n)
        CHECK(mat_power(a, n).trace() == eval_poly(lucas_poly(k, n), t));
    }
}

TEST_CASE("d window reproduces the all-ones order-4 block") {
  const auto w = d_infty_window(4, CoefficientVector::ones(4), -3, 0);
  CHECK(w.row(-3) == std::vector<Int>{7, 1, 0, -1});
  CHECK(w.row(-2) == std::vector<Int>{-1, 6, 0, -1});
  CHECK(w.row(-1) == std::vector<Int>{-1, -2, 5, -1});
  CHECK(w.row(0) == std::vector<Int>{-1, -2, -3, 4});
  CHECK_THROWS_AS(w.row(1), index_out_of_domain);
}

TEST_CASE("d window seeds and right-hand column") {
  const auto ones2 = CoefficientVector::ones(2);
  const auto w = d_infty_window(2, ones2, 0, 1);
  CHECK(w.row(0) == std::vector<Int>{-1, 2});
  CHECK(w.row(1) == std::vector<Int>{2, 1});

  for (int k = 2; k <= 4; ++k)
    for (int which = 0; which < 3; ++which) {
      const CoefficientVector t(test_coeffs(which, k));
      if (t.coef(k) == 0) continue;
      const auto win = d_infty_window(k, t, 0, 10);
      for (Index n = 0; n <= 10; ++n)
        CHECK(win.row(n).back() == eval_poly(lucas_poly(k, n), t));
    }
}

TEST_CASE("d window rows at all-ones are the Lucas branch values") {
  for (int k = 2; k <= 5; ++k) {
    const auto win = d_infty_window(k, CoefficientVector::ones(k), -3, 8);
    for (Index n = -3; n <= 8; ++n)
      for (int i = 1; i <= k; ++i)
        CHECK(win.row(n)[static_cast<size_t>(i - 1)] == kso_lucas(k, i, n));
  }
}

TEST_CASE("a window identity block and right-hand column") {
  const auto w3 = a_infty_window(3, CoefficientVector::ones(3), -2, 1);
  CHECK(w3.row(-2) == std::vector<Int>{1, 0, 0});
  CHECK(w3.row(-1) == std::vector<Int>{0, 1, 0});
  CHECK(w3.row(0) == std::vector<Int>{0, 0, 1});
  CHECK(w3.row(1) == std::vector<Int>{1, 1, 1});

  const auto w2 = a_infty_window(2, CoefficientVector::ones(2), 1, 2);
  CHECK(w2.row(1) == std::vector<Int>{1, 1});
  CHECK(w2.row(2) == std::vector<Int>{1, 2});

  for (int k = 2; k <= 4; ++k)
    for (int which = 0; which < 3; ++which) {
      const CoefficientVector t(test_coeffs(which, k));
      const auto win = a_infty_window(k, t, 0, 10);
      for (Index n = 0; n <= 10; ++n)
        CHECK(win.row(n).back() == eval_poly(fib_poly(k, n), t));
    }
}

TEST_CASE("orbit property holds across every emitted window") {
  for (int k = 2; k <= 4; ++k) {
    const auto t = CoefficientVector::ones(k);
    for (const auto& win : {a_infty_window(k, t, -k - 3, 8), d_infty_window(k, t, -6, 8)})
      for (Index n = win.row_lo; n < win.row_hi; ++n)
        CHECK(orbit_step_forward(win.row(n), t) == win.row(n + 1));
  }
}

TEST_CASE("backward orbit rows demand exact division") {
  // below the identity block the inverse action divides by tk
  CHECK_THROWS_AS(a_infty_window(2, CoefficientVector::from_ints({1, 2}), -3, 0),
                  non_invertible_recurrence);
  CHECK_NOTHROW(a_infty_window(2, CoefficientVector::from_ints({1, 2}), -1, 3));
  CHECK_THROWS_AS(d_infty_window(2, CoefficientVector::from_ints({1, 0}), -1, 0),
                  non_invertible_recurrence);
}

TEST_CASE("hook_schur base cases and reduction to the first branch") {
  const auto ones3 = CoefficientVector::ones(3);
  CHECK(hook_schur(ones3, 1, 0) == 1);
  CHECK(hook_schur(ones3, 3, 2) == 1);
  CHECK(hook_schur(ones3, 0, 0) == 1);
  CHECK_THROWS_AS(hook_schur(ones3, 2, 3), index_out_of_domain);

  for (int k = 2; k <= 4; ++k) {
    const auto ones = CoefficientVector::ones(k);
    for (Index n = 0; n <= 15; ++n)
      CHECK(hook_schur(ones, n, 0) == kso_fib(k, ones, 1, n));
  }
}

TEST_CASE("hook schur matches orbit window entries") {
  // column j of row n carries (-1)^(k-j) S(n,1^(k-j)), a hook of n + k - j
  for (const auto& coeffs : {std::vector<long long>{1, 1, 1}, std::vector<long long>{1, 2, 3}}) {
    const auto t = CoefficientVector::from_ints(coeffs);
    const int k = t.order();
    const auto win = a_infty_window(k, t, 1, 8);
    for (Index n = 1; n <= 8; ++n)
      for (int j = 1; j <= k; ++j) {
        const Int sign = (k - j) % 2 == 0 ? 1 : -1;
        CHECK(win.row(n)[static_cast<size_t>(j - 1)] ==
              sign * hook_schur(t, n + k - j, k - j));
      }
  }
}
