#include "kbonacci/polynomials.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "kbonacci/partitions.hpp"

namespace kbonacci {

namespace {

void require_order(int k) {
  if (k < 2) throw invalid_order("order k must be >= 2, got " + std::to_string(k));
}

int total_degree(const std::vector<int>& exp) {
  return std::accumulate(exp.begin(), exp.end(), 0);
}

}  // namespace

bool GradedLexDesc::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

SparsePolynomial SparsePolynomial::constant(int nvars, const Int& c) {
  SparsePolynomial p(nvars);
  p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
  return p;
}

void SparsePolynomial::add_term(const std::vector<int>& exp, const Int& coef) {
  if (static_cast<int>(exp.size()) != nvars_)
    throw dimension_mismatch("exponent vector length does not match variable count");
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& rhs) {
  if (nvars_ != rhs.nvars_) throw dimension_mismatch("polynomial variable counts differ");
  for (const auto& [exp, coef] : rhs.terms_) add_term(exp, coef);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& rhs) {
  if (nvars_ != rhs.nvars_) throw dimension_mismatch("polynomial variable counts differ");
  for (const auto& [exp, coef] : rhs.terms_) add_term(exp, -coef);
  return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& rhs) const {
  SparsePolynomial out = *this;
  out += rhs;
  return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& rhs) const {
  SparsePolynomial out = *this;
  out -= rhs;
  return out;
}

SparsePolynomial SparsePolynomial::scaled(const Int& s) const {
  SparsePolynomial out(nvars_);
  if (s == 0) return out;
  for (const auto& [exp, coef] : terms_) out.terms_.emplace(exp, coef * s);
  return out;
}

SparsePolynomial SparsePolynomial::times_variable(int j) const {
  if (j < 1 || j > nvars_) throw dimension_mismatch("variable index out of range");
  SparsePolynomial out(nvars_);
  for (const auto& [exp, coef] : terms_) {
    std::vector<int> e = exp;
    ++e[static_cast<size_t>(j - 1)];
    out.terms_.emplace(std::move(e), coef);
  }
  return out;
}

Int SparsePolynomial::evaluate(const CoefficientVector& t) const {
  if (t.order() != nvars_)
    throw dimension_mismatch("evaluation point has " + std::to_string(t.order()) +
                             " coordinates, expected " + std::to_string(nvars_));
  Int total = 0;
  for (const auto& [exp, coef] : terms_) {
    Int term = coef;
    for (int j = 1; j <= nvars_; ++j) {
      const int e = exp[static_cast<size_t>(j - 1)];
      if (e > 0) term *= pow(t.coef(j), static_cast<unsigned>(e));
    }
    total += term;
  }
  return total;
}

bool SparsePolynomial::operator==(const SparsePolynomial& rhs) const {
  return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
}

std::string SparsePolynomial::to_plain_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, coef] : terms_) {
    const bool neg = coef < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const Int mag = abs(coef);
    std::string vars;
    for (int j = 1; j <= nvars_; ++j) {
      const int e = exp[static_cast<size_t>(j - 1)];
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "t" + std::to_string(j);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << "*";
      os << vars;
    }
  }
  return os.str();
}

std::string SparsePolynomial::to_json_string() const {
  std::ostringstream os;
  os << "{\"k\":" << nvars_ << ",\"terms\":[";
  bool first = true;
  for (const auto& [exp, coef] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "{\"exp\":[";
    for (size_t j = 0; j < exp.size(); ++j) {
      if (j) os << ",";
      os << exp[j];
    }
    os << "],\"coef\":\"" << coef.str() << "\"}";
  }
  os << "]}";
  return os.str();
}

SparsePolynomial fib_poly(int k, Index n) {
  require_order(k);
  SparsePolynomial zero(k);
  if (n < 0) return zero;
  // Sliding window of the last k polynomials, oldest first.
  std::deque<SparsePolynomial> win(static_cast<size_t>(k), zero);
  win.back() = SparsePolynomial::constant(k, 1);  // value at index 0
  for (Index m = 1; m <= n; ++m) {
    SparsePolynomial next(k);
    for (int j = 1; j <= k; ++j) next += win[static_cast<size_t>(k - j)].times_variable(j);
    win.pop_front();
    win.push_back(std::move(next));
  }
  return win.back();
}

SparsePolynomial lucas_poly(int k, Index n) {
  require_order(k);
  if (n < 0) return SparsePolynomial(k);
  // G(k,n) is the n-th power sum of the core polynomial roots, so the plain
  // k-term recursion only holds from index k+1 on; up to there the t_m
  // coefficient enters with weight m (Newton identities). The constant k at
  // index 0 is the degree itself and never feeds the corrected recursion.
  std::vector<SparsePolynomial> g;
  g.reserve(static_cast<size_t>(n) + 1);
  g.push_back(SparsePolynomial::constant(k, k));
  for (Index m = 1; m <= n; ++m) {
    SparsePolynomial next(k);
    for (Index j = 1; j <= std::min<Index>(m - 1, k); ++j)
      next += g[static_cast<size_t>(m - j)].times_variable(static_cast<int>(j));
    if (m <= k) {
      std::vector<int> e(static_cast<size_t>(k), 0);
      e[static_cast<size_t>(m - 1)] = 1;
      next.add_term(e, Int(m));
    }
    g.push_back(std::move(next));
  }
  return g[static_cast<size_t>(n)];
}

SparsePolynomial fib_poly_partition(int k, Index n) {
  require_order(k);
  SparsePolynomial out(k);
  if (n < 0) return out;
  for (const auto& a : enumerate_partitions(n, k)) out.add_term(a.parts, multinomial(a));
  return out;
}

SparsePolynomial lucas_poly_partition(int k, Index n) {
  require_order(k);
  if (n < 0) return SparsePolynomial(k);
  if (n == 0) return SparsePolynomial::constant(k, k);
  SparsePolynomial out(k);
  for (const auto& a : enumerate_partitions(n, k)) {
    Rational w(Int(n) * multinomial(a), Int(a.size()));
    if (denominator(w) != 1)
      throw non_integral_coefficient("n/|a| weighted multinomial is not integral at n = " +
                                     std::to_string(n));
    out.add_term(a.parts, numerator(w));
  }
  return out;
}

SparsePolynomial fib2_combinatorial(Index n) {
  SparsePolynomial out(2);
  if (n < 0) return out;
  for (Index j = 0; 2 * j <= n; ++j) {
    // (-1)^j (-t2)^j collapses to t2^j
    out.add_term({static_cast<int>(n - 2 * j), static_cast<int>(j)}, binomial(n - j, j));
  }
  return out;
}

Int eval_poly(const SparsePolynomial& p, const CoefficientVector& t) { return p.evaluate(t); }

SparsePolynomial theorem_2_7_residual(int k, Index n) {
  require_order(k);
  if (n < 0) throw index_out_of_domain("residual is defined for n >= 0");
  SparsePolynomial res = lucas_poly(k, n);
  res -= fib_poly(k, n).scaled(k);
  for (int j = 2; j <= k; ++j)
    res += fib_poly(k, n + 1 - j).times_variable(j - 1).scaled(k - j + 1);
  return res;
}

}  // namespace kbonacci
