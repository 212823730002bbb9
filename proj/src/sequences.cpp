#include "kbonacci/sequences.hpp"

#include <algorithm>
#include <string>

namespace kbonacci {

namespace {

void require_order(int k) {
  if (k < 2) throw invalid_order("order k must be >= 2, got " + std::to_string(k));
}

void require_branch(int k, int branch) {
  if (branch < 1 || branch > k)
    throw invalid_branch("branch must lie in 1.." + std::to_string(k) + ", got " +
                         std::to_string(branch));
}

void require_coeffs(int k, const CoefficientVector& c) {
  if (c.order() != k)
    throw dimension_mismatch("coefficient vector has length " + std::to_string(c.order()) +
                             ", expected " + std::to_string(k));
}

// win holds k consecutive values; advances it one index up.
void step_forward(std::vector<Int>& win, const CoefficientVector& c) {
  const int k = static_cast<int>(win.size());
  Int next = 0;
  for (int j = 1; j <= k; ++j) next += c.coef(j) * win[static_cast<size_t>(k - j)];
  win.erase(win.begin());
  win.push_back(std::move(next));
}

// Solves the recurrence for its lowest term and shifts win one index down.
// Exact by construction when the trailing coefficient is a unit; otherwise
// the division is checked and a non-exact step is an error.
void step_backward(std::vector<Int>& win, const CoefficientVector& c) {
  const int k = static_cast<int>(win.size());
  const Int& ck = c.coef(k);
  if (ck == 0)
    throw non_invertible_recurrence("backward extension requires a nonzero trailing coefficient");
  Int acc = win[static_cast<size_t>(k - 1)];
  for (int j = 1; j <= k - 1; ++j) acc -= c.coef(j) * win[static_cast<size_t>(k - 1 - j)];
  Int q, r;
  divide_qr(acc, ck, q, r);
  if (r != 0)
    throw non_invertible_recurrence("backward step is not integral for trailing coefficient " +
                                    ck.str());
  win.pop_back();
  win.insert(win.begin(), std::move(q));
}

// Evaluates a recurrence anchored at a boundary window.
// boundary(n) must be valid for base_lo <= n <= base_lo + k - 1.
template <typename BoundaryFn>
Int eval_recurrence(int k, const CoefficientVector& c, Index base_lo, Index n,
                    BoundaryFn&& boundary) {
  const Index base_hi = base_lo + k - 1;
  if (n >= base_lo && n <= base_hi) return boundary(n);
  std::vector<Int> win;
  win.reserve(static_cast<size_t>(k));
  for (Index m = base_lo; m <= base_hi; ++m) win.push_back(boundary(m));
  if (n > base_hi) {
    for (Index m = base_hi; m < n; ++m) step_forward(win, c);
    return win.back();
  }
  for (Index m = base_lo; m > n; --m) step_backward(win, c);
  return win.front();
}

template <typename BoundaryFn>
std::vector<std::pair<Index, Int>> table_recurrence(int k, const CoefficientVector& c,
                                                    Index base_lo, Index n_lo, Index n_hi,
                                                    BoundaryFn&& boundary) {
  const Index base_hi = base_lo + k - 1;
  std::vector<std::pair<Index, Int>> out(static_cast<size_t>(n_hi - n_lo + 1));
  for (Index n = n_lo; n <= n_hi; ++n) out[static_cast<size_t>(n - n_lo)].first = n;
  auto record = [&](Index n, const Int& v) {
    if (n >= n_lo && n <= n_hi) out[static_cast<size_t>(n - n_lo)].second = v;
  };

  std::vector<Int> win;
  win.reserve(static_cast<size_t>(k));
  for (Index m = base_lo; m <= base_hi; ++m) {
    win.push_back(boundary(m));
    record(m, win.back());
  }
  std::vector<Int> fwd = win;
  for (Index m = base_hi; m < n_hi; ++m) {
    step_forward(fwd, c);
    record(m + 1, fwd.back());
  }
  std::vector<Int> bwd = std::move(win);
  for (Index m = base_lo; m > n_lo; --m) {
    step_backward(bwd, c);
    record(m - 1, bwd.front());
  }
  return out;
}

Int gok_lucas_seed(int k, Index n) { return n == 0 ? Int(k) : Int(-1); }

}  // namespace

CoefficientVector CoefficientVector::ones(int k) {
  require_order(k);
  return CoefficientVector(std::vector<Int>(static_cast<size_t>(k), Int(1)));
}

CoefficientVector CoefficientVector::from_ints(const std::vector<long long>& v) {
  std::vector<Int> vals;
  vals.reserve(v.size());
  for (long long x : v) vals.emplace_back(x);
  return CoefficientVector(std::move(vals));
}

bool CoefficientVector::all_ones() const {
  return std::all_of(values.begin(), values.end(), [](const Int& x) { return x == 1; });
}

Int kso_fib_boundary(int k, int branch, Index n) {
  require_order(k);
  require_branch(k, branch);
  if (n < 1 - k || n > 0) throw index_out_of_domain("boundary index must lie in 1-k..0");
  return branch == 1 - n ? Int(1) : Int(0);
}

Int kso_lucas_boundary(int k, int branch, Index n) {
  require_order(k);
  require_branch(k, branch);
  if (n < 1 - k || n > 0) throw index_out_of_domain("boundary index must lie in 1-k..0");
  const Index d = branch - n;
  if (d < k) return Int(-branch);
  if (d == k) return Int(-2 * n + branch);
  return Int(k - branch - 1);
}

Int kso_fib(int k, const CoefficientVector& c, int branch, Index n) {
  require_order(k);
  require_branch(k, branch);
  require_coeffs(k, c);
  return eval_recurrence(k, c, 1 - k, n,
                         [&](Index m) { return kso_fib_boundary(k, branch, m); });
}

Int kso_lucas(int k, int branch, Index n) {
  require_order(k);
  require_branch(k, branch);
  return eval_recurrence(k, CoefficientVector::ones(k), 1 - k, n,
                         [&](Index m) { return kso_lucas_boundary(k, branch, m); });
}

Int gok_fib(int k, Index n) {
  require_order(k);
  if (n < 1) throw index_out_of_domain("gok_fib is defined for n >= 1");
  return eval_recurrence(k, CoefficientVector::ones(k), 1, n,
                         [&](Index m) { return m >= k - 1 ? Int(1) : Int(0); });
}

Int gok_lucas(int k, Index n, bool allow_backward) {
  require_order(k);
  if (n < 1 - k && !allow_backward)
    throw index_out_of_domain("gok_lucas index below 1-k with backward extension disabled");
  return eval_recurrence(k, CoefficientVector::ones(k), 1 - k, n,
                         [&](Index m) { return gok_lucas_seed(k, m); });
}

std::vector<std::pair<Index, Int>> sequence_table(const SequenceSpec& spec, Index n_lo,
                                                  Index n_hi) {
  require_order(spec.k);
  if (n_lo > n_hi) throw index_out_of_domain("table range is empty: n_lo > n_hi");
  const int k = spec.k;
  CoefficientVector c = spec.coefficients.order() == 0 ? CoefficientVector::ones(k)
                                                       : spec.coefficients;
  require_coeffs(k, c);
  if (spec.family != Family::ksokf && !c.all_ones())
    throw dimension_mismatch("general coefficients are only supported for the ksokf family");

  switch (spec.family) {
    case Family::ksokf:
      require_branch(k, spec.branch);
      return table_recurrence(k, c, 1 - k, n_lo, n_hi,
                              [&](Index m) { return kso_fib_boundary(k, spec.branch, m); });
    case Family::ksokl:
      require_branch(k, spec.branch);
      return table_recurrence(k, c, 1 - k, n_lo, n_hi,
                              [&](Index m) { return kso_lucas_boundary(k, spec.branch, m); });
    case Family::gokf:
      if (n_lo < 1) throw index_out_of_domain("gokf is defined for n >= 1");
      return table_recurrence(k, c, 1, n_lo, n_hi,
                              [&](Index m) { return m >= k - 1 ? Int(1) : Int(0); });
    case Family::gokl:
      return table_recurrence(k, c, 1 - k, n_lo, n_hi,
                              [&](Index m) { return gok_lucas_seed(k, m); });
  }
  throw error("unreachable family");
}

}  // namespace kbonacci
