#include "kbonacci/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>

#include "kbonacci/sequences.hpp"

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

void require_positive_index(Index n) {
  if (n < 1) throw index_out_of_domain("combinatorial forms are defined for n >= 1");
}

void emit(std::vector<WeightedPartition>& out, std::vector<int>& parts, int j, Index rem, int k) {
  if (j == k) {
    if (rem % k == 0 && rem / k <= static_cast<Index>(INT32_MAX)) {
      parts[static_cast<size_t>(j - 1)] = static_cast<int>(rem / k);
      out.push_back(WeightedPartition{parts});
      parts[static_cast<size_t>(j - 1)] = 0;
    }
    return;
  }
  for (Index a = 0; a * j <= rem; ++a) {
    parts[static_cast<size_t>(j - 1)] = static_cast<int>(a);
    emit(out, parts, j + 1, rem - a * j, k);
  }
  parts[static_cast<size_t>(j - 1)] = 0;
}

// The per-term n/|a| weight does not factor out of the sum, so each term is
// computed as an exact rational and checked integral on its own.
Int weighted_term(Index num, const WeightedPartition& a) {
  const Index sz = a.size();
  Rational w(Int(num) * multinomial(a), Int(sz));
  if (denominator(w) != 1)
    throw non_integral_coefficient("weight " + std::to_string(num) +
                                   "/|a| times multinomial is not integral");
  return numerator(w);
}

// Plain multinomial sum over a |- w; equals the all-ones Fibonacci
// polynomial value for w >= 0 and vanishes for w < 0.
Int plain_sum(int k, Index w) {
  if (w < 0) return Int(0);
  Int total = 0;
  for (const auto& a : enumerate_partitions(w, k)) total += multinomial(a);
  return total;
}

// n/|a|-weighted sum over a |- w; equals the all-ones Lucas polynomial value
// for w >= 1, with the constant k at w = 0.
Int lucas_weighted_sum(int k, Index w) {
  if (w < 0) return Int(0);
  if (w == 0) return Int(k);
  Int total = 0;
  for (const auto& a : enumerate_partitions(w, k)) total += weighted_term(w, a);
  return total;
}

// Hook-weighted sum over m |- (w + k - 1) with per-term weight m_k/|m|.
Int hook_weighted_sum(int k, Index w) {
  Int total = 0;
  for (const auto& m : enumerate_partitions(w + k - 1, k)) {
    const int mk = m.parts.back();
    if (mk == 0) continue;
    const Index sz = m.size();
    Rational term(Int(mk) * multinomial(m), Int(sz));
    if (denominator(term) != 1) throw non_integral_sum("hook weight m_k/|m| is not integral");
    total += numerator(term);
  }
  return total;
}

// The sums above are pure in (k, w) and re-enter the same weights many times
// across identity grids; a small shared memo keeps the sweeps fast.
enum class SumKind { plain, lucas, hook };

Int cached_sum(SumKind kind, int k, Index w) {
  static std::mutex mu;
  static std::map<std::tuple<SumKind, int, Index>, Int> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({kind, k, w});
    if (it != memo.end()) return it->second;
  }
  Int v;
  switch (kind) {
    case SumKind::plain: v = plain_sum(k, w); break;
    case SumKind::lucas: v = lucas_weighted_sum(k, w); break;
    case SumKind::hook: v = hook_weighted_sum(k, w); break;
  }
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(std::make_tuple(kind, k, w), std::move(v)).first->second;
}

// Branch-k Fibonacci value through the plain partition representation,
// falling back to the exact sequence below its domain.
Int fib_k_plain(int k, Index n) {
  if (n >= 1) return cached_sum(SumKind::plain, k, n - 1);
  return kso_fib(k, CoefficientVector::ones(k), k, n);
}

// Same value through the hook-weighted representation.
Int fib_k_hook(int k, Index n) {
  if (n > 1 - k) return cached_sum(SumKind::hook, k, n);
  return kso_fib(k, CoefficientVector::ones(k), k, n);
}

// Branch-k Lucas value through the weighted partition representation.
Int lucas_k_partition(int k, Index n) {
  if (n >= 0) return cached_sum(SumKind::lucas, k, n);
  return kso_lucas(k, k, n);
}

// Branch reduction shared by the Lucas combinatorial forms: branch i as
// j-weighted sums of branch-k Fibonacci values.
template <typename FibK>
Int lucas_from_fib_k(int k, int branch, Index n, FibK&& fib_k) {
  Int total = 0;
  if (branch == 1) {
    for (int j = 1; j <= k; ++j) total += Int(j) * fib_k(k, n - j);
  } else if (branch == k) {
    for (int j = 1; j <= k; ++j) total += Int(j) * fib_k(k, n + 1 - j);
  } else {
    for (int m = 1; m <= branch; ++m)
      for (int j = 1; j <= k; ++j) total += Int(j) * fib_k(k, n - m - j + 1);
  }
  return total;
}

}  // namespace

Index WeightedPartition::weight() const {
  Index w = 0;
  for (size_t j = 0; j < parts.size(); ++j) w += static_cast<Index>(j + 1) * parts[j];
  return w;
}

Index WeightedPartition::size() const {
  Index s = 0;
  for (int a : parts) s += a;
  return s;
}

std::vector<WeightedPartition> enumerate_partitions(Index n, int k) {
  if (n < 0) throw index_out_of_domain("partition weight must be nonnegative");
  if (k < 1) throw invalid_order("partitions need at least one part size");
  std::vector<WeightedPartition> out;
  std::vector<int> parts(static_cast<size_t>(k), 0);
  emit(out, parts, 1, n, k);
  return out;
}

Int multinomial(const WeightedPartition& a) {
  // Product of binomials over prefix sums; stays in integers throughout.
  Int result = 1;
  Index prefix = 0;
  for (int aj : a.parts) {
    if (aj < 0) throw index_out_of_domain("partition entries must be nonnegative");
    prefix += aj;
    result *= binomial(prefix, aj);
  }
  return result;
}

Int binomial(Index n, Index r) {
  if (r < 0 || n < r) return Int(0);
  r = std::min(r, n - r);
  Int num = 1;
  for (Index i = 1; i <= r; ++i) {
    num *= Int(n - r + i);
    num /= Int(i);  // exact: C(n-r+i, i) is an integer at every step
  }
  return num;
}

Int fib_combinatorial(int k, int branch, Index n) {
  require_order(k);
  require_branch(k, branch);
  require_positive_index(n);
  if (branch == 1) return cached_sum(SumKind::plain, k, n);
  if (branch == k) return cached_sum(SumKind::plain, k, n - 1);
  Int total = 0;
  for (int m = 1; m <= k - branch + 1; ++m) total += cached_sum(SumKind::plain, k, n - m);
  return total;
}

Int lemma_2_16_fib(int k, Index n, Index i_shift) {
  require_order(k);
  if (i_shift < 0 || i_shift > n - 1)
    throw index_out_of_domain("shift must satisfy 0 <= shift <= n-1");
  return cached_sum(SumKind::hook, k, n - i_shift);
}

Int lucas_combinatorial_2_17(int k, int branch, Index n) {
  require_order(k);
  require_branch(k, branch);
  require_positive_index(n);
  return lucas_from_fib_k(k, branch, n, fib_k_hook);
}

Int lucas_combinatorial_2_18(int k, int branch, Index n) {
  require_order(k);
  require_branch(k, branch);
  require_positive_index(n);
  if (branch == 1) return lucas_k_partition(k, n - 1);
  if (branch == k) return lucas_k_partition(k, n);
  Int total = 0;
  for (int m = 1; m <= branch; ++m) total += lucas_k_partition(k, n - m);
  return total;
}

Int lucas_combinatorial_2_19(int k, int branch, Index n) {
  require_order(k);
  require_branch(k, branch);
  require_positive_index(n);
  return lucas_from_fib_k(k, branch, n, fib_k_plain);
}

Int lucas2_binomial(Index n) {
  require_positive_index(n);
  Int total = 0;
  for (Index j = 1; j <= 2; ++j) {
    Int inner = 0;
    for (Index s = 0; 2 * s <= n - j + 1; ++s) inner += binomial(n - j - s, s);
    total += Int(j) * inner;
  }
  return total;
}

}  // namespace kbonacci
