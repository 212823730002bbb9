#include "kbonacci/matrices.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace kbonacci {

namespace {

void require_order(int k) {
  if (k < 2) throw invalid_order("order k must be >= 2, got " + std::to_string(k));
}

void require_coeffs(int k, const CoefficientVector& c) {
  if (c.order() != k)
    throw dimension_mismatch("coefficient vector has length " + std::to_string(c.order()) +
                             ", expected " + std::to_string(k));
}

}  // namespace

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw dimension_mismatch("negative matrix dimension");
  entries_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Int(0));
}

size_t ExactMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw dimension_mismatch("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                             ") out of range");
  return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw dimension_mismatch("cannot multiply " + std::to_string(rows_) + "x" +
                             std::to_string(cols_) + " by " + std::to_string(rhs.rows_) + "x" +
                             std::to_string(rhs.cols_));
  ExactMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const Int& a = at(i, l);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(l, j);
    }
  return out;
}

Int ExactMatrix::trace() const {
  if (rows_ != cols_) throw dimension_mismatch("trace of a non-square matrix");
  Int t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

ExactMatrix companion(int k, const CoefficientVector& c) {
  require_order(k);
  require_coeffs(k, c);
  ExactMatrix m(k, k);
  for (int j = 0; j < k; ++j) m.at(0, j) = c.coef(j + 1);
  for (int i = 1; i < k; ++i) m.at(i, i - 1) = 1;
  return m;
}

ExactMatrix orbit_companion(int k, const CoefficientVector& t) {
  require_order(k);
  require_coeffs(k, t);
  ExactMatrix m(k, k);
  for (int i = 0; i + 1 < k; ++i) m.at(i, i + 1) = 1;
  for (int j = 0; j < k; ++j) m.at(k - 1, j) = t.coef(k - j);
  return m;
}

ExactMatrix mat_power(const ExactMatrix& m, Index n) {
  if (m.rows() != m.cols()) throw dimension_mismatch("matrix power needs a square matrix");
  if (n < 0) throw index_out_of_domain("matrix power exponent must be nonnegative");
  ExactMatrix result = ExactMatrix::identity(m.rows());
  ExactMatrix base = m;
  for (Index e = n; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    base = base * base;
  }
  return result;
}

ExactMatrix f_tilde(int k, const CoefficientVector& c, Index n) {
  require_order(k);
  require_coeffs(k, c);
  ExactMatrix m(k, k);
  for (int i = 1; i <= k; ++i) {
    SequenceSpec spec{Family::ksokf, k, i, c};
    auto col = sequence_table(spec, n - k + 1, n);
    for (int r = 0; r < k; ++r) m.at(r, i - 1) = col[static_cast<size_t>(k - 1 - r)].second;
  }
  return m;
}

ExactMatrix l_tilde_0(int k) {
  require_order(k);
  ExactMatrix m(k, k);
  for (int r = 0; r < k; ++r)
    for (int i = 1; i <= k; ++i) {
      if (i + r < k)
        m.at(r, i - 1) = -i;
      else if (i + r == k)
        m.at(r, i - 1) = 2 * r + i;
      else
        m.at(r, i - 1) = k - i - 1;
    }
  return m;
}

ExactMatrix l_tilde(int k, Index n) {
  require_order(k);
  ExactMatrix m(k, k);
  for (int i = 1; i <= k; ++i) {
    SequenceSpec spec{Family::ksokl, k, i, CoefficientVector::ones(k)};
    auto col = sequence_table(spec, n - k + 1, n);
    for (int r = 0; r < k; ++r) m.at(r, i - 1) = col[static_cast<size_t>(k - 1 - r)].second;
  }
  return m;
}

std::vector<Int> orbit_step_forward(const std::vector<Int>& v, const CoefficientVector& t) {
  const int k = t.order();
  if (static_cast<int>(v.size()) != k) throw dimension_mismatch("row length does not match order");
  std::vector<Int> w(static_cast<size_t>(k));
  const Int& last = v[static_cast<size_t>(k - 1)];
  for (int j = 1; j <= k; ++j) {
    Int x = last * t.coef(k + 1 - j);
    if (j >= 2) x += v[static_cast<size_t>(j - 2)];
    w[static_cast<size_t>(j - 1)] = std::move(x);
  }
  return w;
}

std::vector<Int> orbit_step_backward(const std::vector<Int>& v, const CoefficientVector& t) {
  const int k = t.order();
  if (static_cast<int>(v.size()) != k) throw dimension_mismatch("row length does not match order");
  const Int& tk = t.coef(k);
  if (tk == 0) throw non_invertible_recurrence("backward orbit rows require tk != 0");
  std::vector<Int> u(static_cast<size_t>(k));
  Int q, r;
  divide_qr(v[0], tk, q, r);
  if (r != 0)
    throw non_invertible_recurrence("backward orbit step is not integral for tk = " + tk.str());
  u[static_cast<size_t>(k - 1)] = std::move(q);
  for (int j = 1; j <= k - 1; ++j)
    u[static_cast<size_t>(j - 1)] = v[static_cast<size_t>(j)] - u[static_cast<size_t>(k - 1)] * t.coef(k - j);
  return u;
}

namespace {

// Walks the orbit from a seed row at seed_index to cover [row_lo, row_hi].
InfiniteMatrixWindow build_window(int k, const CoefficientVector& t, Index row_lo, Index row_hi,
                                  Index seed_index, std::vector<Int> seed) {
  if (row_lo > row_hi) throw index_out_of_domain("window range is empty: row_lo > row_hi");
  InfiniteMatrixWindow win;
  win.k = k;
  win.t = t;
  win.row_lo = row_lo;
  win.row_hi = row_hi;
  win.rows.resize(static_cast<size_t>(row_hi - row_lo + 1));
  auto record = [&](Index n, const std::vector<Int>& v) {
    if (n >= row_lo && n <= row_hi) win.rows[static_cast<size_t>(n - row_lo)] = v;
  };
  record(seed_index, seed);
  std::vector<Int> cur = seed;
  for (Index n = seed_index; n < row_hi; ++n) {
    cur = orbit_step_forward(cur, t);
    record(n + 1, cur);
  }
  cur = std::move(seed);
  for (Index n = seed_index; n > row_lo; --n) {
    cur = orbit_step_backward(cur, t);
    record(n - 1, cur);
  }
  return win;
}

}  // namespace

const std::vector<Int>& InfiniteMatrixWindow::row(Index n) const {
  if (n < row_lo || n > row_hi) throw index_out_of_domain("row index outside window");
  return rows[static_cast<size_t>(n - row_lo)];
}

InfiniteMatrixWindow a_infty_window(int k, const CoefficientVector& t, Index row_lo,
                                    Index row_hi) {
  require_order(k);
  require_coeffs(k, t);
  std::vector<Int> seed(static_cast<size_t>(k), Int(0));
  seed.back() = 1;  // row 0 closes the identity block occupying rows 1-k..0
  return build_window(k, t, row_lo, row_hi, 0, std::move(seed));
}

InfiniteMatrixWindow d_infty_window(int k, const CoefficientVector& t, Index row_lo,
                                    Index row_hi) {
  require_order(k);
  require_coeffs(k, t);
  std::vector<Int> seed(static_cast<size_t>(k));
  for (int j = 1; j <= k - 1; ++j) seed[static_cast<size_t>(j - 1)] = Int(-j) * t.coef(k - j);
  seed[static_cast<size_t>(k - 1)] = k;
  return build_window(k, t, row_lo, row_hi, 0, std::move(seed));
}

Int hook_schur(const CoefficientVector& t, Index n, Index r) {
  const int k = t.order();
  require_order(k);
  if (n < 0 || r < 0 || r > n)
    throw index_out_of_domain("hook parameters must satisfy 0 <= r <= n");
  // S values for the r = 0 column, built once up to n.
  std::vector<Int> s(static_cast<size_t>(n) + 1);
  s[0] = 1;
  for (Index m = 1; m <= n; ++m) {
    Int acc = 0;
    for (Index j = 1; j <= std::min<Index>(m, k); ++j)
      acc += t.coef(static_cast<int>(j)) * s[static_cast<size_t>(m - j)];
    s[static_cast<size_t>(m)] = std::move(acc);
  }
  if (r == 0) return s[static_cast<size_t>(n)];
  Int acc = 0;
  for (Index j = r + 1; j <= std::min<Index>(n, k); ++j)
    acc += t.coef(static_cast<int>(j)) * s[static_cast<size_t>(n - j)];
  return (r % 2 == 0) ? acc : -acc;
}

}  // namespace kbonacci
