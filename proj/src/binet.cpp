#include "kbonacci/binet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace kbonacci {

namespace {

using Cplx = std::complex<double>;

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int aberth_iteration_cap = 200;
constexpr double aberth_step_tol = 1e-14;
constexpr double separation_tol = 1e-8;
constexpr double det_floor = 1e-12;

void require_order(int k) {
  if (k < 2) throw invalid_order("order k must be >= 2, got " + std::to_string(k));
}

void require_branch(int k, int branch) {
  if (branch < 1 || branch > k)
    throw invalid_branch("branch must lie in 1.." + std::to_string(k) + ", got " +
                         std::to_string(branch));
}

void require_in_cap(Index n) {
  if (n > binet_index_cap || n < -binet_index_cap)
    throw range_exceeded("index " + std::to_string(n) + " exceeds the floating-point cap " +
                         std::to_string(binet_index_cap));
}

void require_usable(const RootSet& rs) {
  if (!rs.distinct)
    throw repeated_roots("root separation test failed; closed-form evaluation unavailable");
}

// Descending coefficients of x^k - t1 x^(k-1) - ... - tk.
std::vector<double> core_coeffs(int k, const CoefficientVector& t) {
  std::vector<double> c(static_cast<size_t>(k) + 1);
  c[0] = 1.0;
  for (int j = 1; j <= k; ++j) c[static_cast<size_t>(j)] = -t.coef(j).convert_to<double>();
  return c;
}

Cplx horner(const std::vector<double>& coeffs, Cplx z) {
  Cplx acc{0.0, 0.0};
  for (double c : coeffs) acc = acc * z + c;
  return acc;
}

std::vector<double> derivative(const std::vector<double>& coeffs) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  std::vector<double> d(static_cast<size_t>(deg));
  for (int i = 0; i < deg; ++i) d[static_cast<size_t>(i)] = coeffs[static_cast<size_t>(i)] * (deg - i);
  return d;
}

std::vector<double> second_derivative(const std::vector<double>& coeffs) {
  return derivative(derivative(coeffs));
}

Cplx int_pow(Cplx z, Index e) {
  if (e == 0) return Cplx{1.0, 0.0};
  const bool neg = e < 0;
  unsigned long long m = neg ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Cplx acc{1.0, 0.0};
  Cplx base = z;
  while (m > 0) {
    if (m & 1ULL) acc *= base;
    base *= base;
    m >>= 1;
  }
  return neg ? Cplx{1.0, 0.0} / acc : acc;
}

struct Evaluator {
  RootSet rs;
  std::vector<double> p, dp, ddp;

  explicit Evaluator(const RootSet& roots, const CoefficientVector& t)
      : rs(roots),
        p(core_coeffs(roots.k, t)),
        dp(derivative(p)),
        ddp(second_derivative(p)) {}

  // sum over roots of lambda^e / P'(lambda), with a first-order error bound
  // combining root residuals and power/divide roundoff.
  ApproxValue power_sum(Index e) const {
    Cplx total{0.0, 0.0};
    double est = 0.0;
    for (const Cplx& lam : rs.roots) {
      const Cplx d1 = horner(dp, lam);
      const Cplx term = int_pow(lam, e) / d1;
      total += term;
      const double abs_lam = std::max(std::abs(lam), 1e-3);
      const double abs_term = std::abs(term);
      const double root_err = rs.residual_bound / std::abs(d1);
      const double sensitivity =
          abs_term * (std::abs(static_cast<double>(e)) / abs_lam +
                      std::abs(horner(ddp, lam)) / std::abs(d1));
      est += root_err * sensitivity + eps * abs_term * (2.0 * std::abs(static_cast<double>(e)) + 8.0);
    }
    check_imag(total, est);
    return ApproxValue{total.real(), est + eps};
  }

  // Same sum as a ratio of determinants: Vandermonde of the roots with the
  // top power row replaced by lambda^e.
  ApproxValue det_ratio(Index e) const {
    const int k = rs.k;
    auto vmat = [&](bool replaced) {
      std::vector<std::vector<Cplx>> a(static_cast<size_t>(k),
                                       std::vector<Cplx>(static_cast<size_t>(k)));
      for (int c = 0; c < k; ++c) {
        const Cplx lam = rs.roots[static_cast<size_t>(c)];
        a[0][static_cast<size_t>(c)] = replaced ? int_pow(lam, e) : int_pow(lam, k - 1);
        for (int r = 1; r < k; ++r) a[static_cast<size_t>(r)][static_cast<size_t>(c)] = int_pow(lam, k - 1 - r);
      }
      return a;
    };
    const Cplx den = lu_det(vmat(false));
    if (std::abs(den) < det_floor)
      throw ill_conditioned("Vandermonde determinant magnitude " + std::to_string(std::abs(den)) +
                            " below threshold");
    const Cplx num = lu_det(vmat(true));
    const Cplx ratio = num / den;
    // Reuse the power-sum magnitude as the natural scale; add LU growth.
    double scale = 0.0;
    for (const Cplx& lam : rs.roots)
      scale += std::abs(int_pow(lam, e)) / std::abs(horner(dp, lam));
    const double kd = static_cast<double>(k);
    double est = eps * (scale + std::abs(ratio)) *
                     (kd * kd * kd + 2.0 * std::abs(static_cast<double>(e)) + 8.0) +
                 rs.residual_bound * scale * (std::abs(static_cast<double>(e)) + kd);
    check_imag(ratio, est);
    return ApproxValue{ratio.real(), est + eps};
  }

  static void check_imag(Cplx v, double est) {
    // Conjugate pairs must cancel; a surviving imaginary part means the
    // root set does not describe a real sequence value.
    const double bound = std::max(1e-8 * std::abs(v.real()) + 1e-12, est);
    if (std::abs(v.imag()) >= bound)
      throw ill_conditioned("imaginary residue " + std::to_string(v.imag()) +
                            " exceeds cancellation bound");
  }

  static Cplx lu_det(std::vector<std::vector<Cplx>> a) {
    const size_t n = a.size();
    Cplx det{1.0, 0.0};
    for (size_t col = 0; col < n; ++col) {
      size_t pivot = col;
      for (size_t r = col + 1; r < n; ++r)
        if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
      if (std::abs(a[pivot][col]) == 0.0) return Cplx{0.0, 0.0};
      if (pivot != col) {
        std::swap(a[pivot], a[col]);
        det = -det;
      }
      det *= a[col][col];
      for (size_t r = col + 1; r < n; ++r) {
        const Cplx f = a[r][col] / a[col][col];
        for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      }
    }
    return det;
  }
};

// Branch split shared by the Lucas closed forms: j-weighted sums of the
// branch-k Fibonacci evaluations at shifted indices.
template <typename Eval>
ApproxValue lucas_sum(int k, int branch, Index n, Eval&& fib_at) {
  double value = 0.0, est = 0.0;
  auto add = [&](Index idx, int weight) {
    const ApproxValue v = fib_at(idx);
    value += weight * v.value;
    est += weight * v.abs_error_estimate;
  };
  if (branch == 1) {
    for (int j = 1; j <= k; ++j) add(n - j, j);
  } else if (branch == k) {
    for (int j = 1; j <= k; ++j) add(n + 1 - j, j);
  } else {
    for (int m = 1; m <= branch; ++m)
      for (int j = 1; j <= k; ++j) add(n - m - j + 1, j);
  }
  return ApproxValue{value, est};
}

RootSet ones_roots(int k) { return core_roots(k, CoefficientVector::ones(k)); }

}  // namespace

RootSet core_roots(int k, const CoefficientVector& t) {
  require_order(k);
  if (t.order() != k)
    throw dimension_mismatch("coefficient vector has length " + std::to_string(t.order()) +
                             ", expected " + std::to_string(k));
  const std::vector<double> p = core_coeffs(k, t);
  const std::vector<double> dp = derivative(p);

  double max_coef = 1.0;
  for (double c : p) max_coef = std::max(max_coef, std::abs(c));
  const double radius = 1.0 + max_coef;

  std::vector<Cplx> z(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    const double angle = 2.0 * std::numbers::pi * (j + 0.25) / k + 0.4;
    z[static_cast<size_t>(j)] = 0.5 * radius * Cplx{std::cos(angle), std::sin(angle)};
  }

  bool converged = false;
  for (int iter = 0; iter < aberth_iteration_cap && !converged; ++iter) {
    converged = true;
    for (int j = 0; j < k; ++j) {
      Cplx& zj = z[static_cast<size_t>(j)];
      Cplx d1 = horner(dp, zj);
      if (std::abs(d1) == 0.0) {
        zj += Cplx{1e-8, 1e-8};
        d1 = horner(dp, zj);
      }
      const Cplx newton = horner(p, zj) / d1;
      Cplx repulse{0.0, 0.0};
      for (int l = 0; l < k; ++l)
        if (l != j) repulse += Cplx{1.0, 0.0} / (zj - z[static_cast<size_t>(l)]);
      const Cplx step = newton / (Cplx{1.0, 0.0} - newton * repulse);
      zj -= step;
      if (std::abs(step) > aberth_step_tol * std::max(1.0, std::abs(zj))) converged = false;
    }
  }

  double residual = 0.0;
  for (const Cplx& root : z) residual = std::max(residual, std::abs(horner(p, root)));
  if (residual > 1e-12 * (1.0 + max_coef))
    throw no_convergence("root residual " + std::to_string(residual) +
                         " above tolerance after iteration cap");

  std::sort(z.begin(), z.end(), [](const Cplx& a, const Cplx& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });

  double min_sep = std::numeric_limits<double>::infinity();
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      min_sep = std::min(min_sep, std::abs(z[static_cast<size_t>(a)] - z[static_cast<size_t>(b)]));

  // A genuinely repeated root cannot be resolved below sqrt(eps) in doubles,
  // so the separation test alone can let a double root through by a whisker.
  // P'(lambda) ~ 0 is the quantity the closed forms actually divide by, so
  // its magnitude doubles as the multiplicity guard.
  double min_deriv = std::numeric_limits<double>::infinity();
  for (const Cplx& root : z) min_deriv = std::min(min_deriv, std::abs(horner(dp, root)));

  RootSet rs;
  rs.k = k;
  rs.roots = std::move(z);
  rs.residual_bound = residual;
  rs.distinct = min_sep > separation_tol && min_deriv > 1e-6 * (1.0 + max_coef);
  return rs;
}

ApproxValue binet_fib(const RootSet& rs, Index n) {
  require_usable(rs);
  require_in_cap(n);
  Evaluator ev(rs, CoefficientVector::ones(rs.k));
  return ev.power_sum(n + rs.k - 2);
}

ApproxValue binet_fib(int k, Index n) { return binet_fib(ones_roots(k), n); }

ApproxValue vandermonde_fib(const RootSet& rs, Index n) {
  require_usable(rs);
  require_in_cap(n);
  Evaluator ev(rs, CoefficientVector::ones(rs.k));
  return ev.det_ratio(n + rs.k - 2);
}

ApproxValue vandermonde_fib(int k, Index n) { return vandermonde_fib(ones_roots(k), n); }

ApproxValue binet_lucas(const RootSet& rs, int branch, Index n) {
  require_usable(rs);
  require_branch(rs.k, branch);
  require_in_cap(n);
  Evaluator ev(rs, CoefficientVector::ones(rs.k));
  return lucas_sum(rs.k, branch, n,
                   [&](Index idx) { return ev.power_sum(idx + rs.k - 2); });
}

ApproxValue binet_lucas(int k, int branch, Index n) {
  return binet_lucas(ones_roots(k), branch, n);
}

ApproxValue vandermonde_lucas(const RootSet& rs, int branch, Index n) {
  require_usable(rs);
  require_branch(rs.k, branch);
  require_in_cap(n);
  Evaluator ev(rs, CoefficientVector::ones(rs.k));
  return lucas_sum(rs.k, branch, n,
                   [&](Index idx) { return ev.det_ratio(idx + rs.k - 2); });
}

ApproxValue vandermonde_lucas(int k, int branch, Index n) {
  return vandermonde_lucas(ones_roots(k), branch, n);
}

}  // namespace kbonacci
