#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "kbonacci/partitions.hpp"
#include "kbonacci/sequences.hpp"

using namespace kbonacci;

namespace {

// Coefficient of x^n in prod_{j=1..k} 1/(1 - x^j), by unbounded-knapsack dp.
long long gf_partition_count(int n, int k) {
  std::vector<long long> dp(static_cast<size_t>(n) + 1, 0);
  dp[0] = 1;
  for (int j = 1; j <= k; ++j)
    for (int w = j; w <= n; ++w) dp[static_cast<size_t>(w)] += dp[static_cast<size_t>(w - j)];
  return dp[static_cast<size_t>(n)];
}

// Odometer enumeration over the bounded box, filtered by weight.
std::set<std::vector<int>> brute_force_partitions(int n, int k) {
  std::set<std::vector<int>> out;
  std::vector<int> a(static_cast<size_t>(k), 0);
  while (true) {
    long long w = 0;
    for (int j = 0; j < k; ++j) w += static_cast<long long>(j + 1) * a[static_cast<size_t>(j)];
    if (w == n) out.insert(a);
    int pos = 0;
    while (pos < k) {
      ++a[static_cast<size_t>(pos)];
      if ((pos + 1) * a[static_cast<size_t>(pos)] <= n) break;
      a[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return out;
}

Int factorial(long long n) {
  Int r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("enumerate_partitions examples and ordering") {
  const auto empty = enumerate_partitions(0, 3);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].parts == std::vector<int>{0, 0, 0});

  const auto p42 = enumerate_partitions(4, 2);
  REQUIRE(p42.size() == 3);
  CHECK(p42[0].parts == std::vector<int>{0, 2});
  CHECK(p42[1].parts == std::vector<int>{2, 1});
  CHECK(p42[2].parts == std::vector<int>{4, 0});

  CHECK(enumerate_partitions(3, 3).size() == 3);

  // ascending lexicographic order, no duplicates
  for (int n : {5, 9, 12})
    for (int k : {2, 3, 4}) {
      const auto ps = enumerate_partitions(n, k);
      for (size_t j = 1; j < ps.size(); ++j) CHECK(ps[j - 1].parts < ps[j].parts);
      for (const auto& p : ps) CHECK(p.weight() == n);
    }
}

TEST_CASE("enumeration completeness against the generating function") {
  for (int k = 1; k <= 5; ++k)
    for (int n = 0; n <= 25; ++n)
      CHECK(static_cast<long long>(enumerate_partitions(n, k).size()) ==
            gf_partition_count(n, k));
}

TEST_CASE("enumeration matches brute force") {
  for (int k = 2; k <= 4; ++k)
    for (int n = 0; n <= 12; ++n) {
      const auto got = enumerate_partitions(n, k);
      const auto want = brute_force_partitions(n, k);
      REQUIRE(got.size() == want.size());
      for (const auto& p : got) CHECK(want.count(p.parts) == 1);
    }
}

TEST_CASE("multinomial examples and factorial oracle") {
  CHECK(multinomial(WeightedPartition{{2, 1}}) == 3);
  CHECK(multinomial(WeightedPartition{{0, 0, 0}}) == 1);
  CHECK(multinomial(WeightedPartition{{3, 2, 1}}) == 60);
  for (int k = 2; k <= 4; ++k)
    for (int n = 0; n <= 14; ++n)
      for (const auto& a : enumerate_partitions(n, k)) {
        Int denom = 1;
        for (int aj : a.parts) denom *= factorial(aj);
        CHECK(multinomial(a) == factorial(a.size()) / denom);
      }
}

TEST_CASE("binomial convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(4, -1) == 0);
}

TEST_CASE("fib_combinatorial frozen values") {
  CHECK(fib_combinatorial(2, 2, 4) == 3);
  CHECK(fib_combinatorial(3, 2, 3) == 3);
  CHECK(fib_combinatorial(2, 1, 1) == 1);
  CHECK_THROWS_AS(fib_combinatorial(3, 4, 2), invalid_branch);
}

TEST_CASE("fib_combinatorial equals the recurrence backend") {
  for (int k = 2; k <= 5; ++k) {
    const auto ones = CoefficientVector::ones(k);
    for (int i = 1; i <= k; ++i)
      for (Index n = 1; n <= 25; ++n)
        CHECK(fib_combinatorial(k, i, n) == kso_fib(k, ones, i, n));
  }
}

TEST_CASE("lemma_2_16_fib values and domain") {
  CHECK(lemma_2_16_fib(2, 4, 0) == 3);
  CHECK(lemma_2_16_fib(2, 1, 0) == 1);
  CHECK(lemma_2_16_fib(3, 5, 2) == kso_fib(3, CoefficientVector::ones(3), 3, 3));
  CHECK_THROWS_AS(lemma_2_16_fib(2, 4, 4), index_out_of_domain);
  CHECK_THROWS_AS(lemma_2_16_fib(2, 4, -1), index_out_of_domain);
  for (int k = 2; k <= 5; ++k) {
    const auto ones = CoefficientVector::ones(k);
    for (Index n = 1; n <= 20; ++n)
      for (Index shift = 0; shift <= n - 1; ++shift)
        CHECK(lemma_2_16_fib(k, n, shift) == kso_fib(k, ones, k, n - shift));
  }
}

TEST_CASE("lucas combinatorial forms: frozen values") {
  CHECK(lucas_combinatorial_2_18(2, 2, 4) == 7);
  CHECK(lucas_combinatorial_2_18(2, 1, 2) == kso_lucas(2, 1, 2));
  CHECK(lucas_combinatorial_2_18(3, 2, 3) == 4);
  CHECK(lucas_combinatorial_2_19(2, 2, 3) == 4);
  CHECK(lucas_combinatorial_2_19(2, 2, 1) == 1);
  CHECK(lucas_combinatorial_2_19(4, 3, 4) == 11);
  CHECK(lucas_combinatorial_2_17(2, 2, 3) == 4);
  CHECK(lucas_combinatorial_2_17(3, 3, 1) == 1);
  CHECK(lucas_combinatorial_2_17(5, 3, 7) == 103);
}

TEST_CASE("every lucas combinatorial form equals the recurrence backend") {
  for (int k = 2; k <= 5; ++k)
    for (int i = 1; i <= k; ++i)
      for (Index n = 1; n <= 25; ++n) {
        const Int want = kso_lucas(k, i, n);
        CHECK(lucas_combinatorial_2_17(k, i, n) == want);
        CHECK(lucas_combinatorial_2_18(k, i, n) == want);
        CHECK(lucas_combinatorial_2_19(k, i, n) == want);
      }
}

TEST_CASE("lucas2_binomial equals ordinary Lucas") {
  CHECK(lucas2_binomial(1) == 1);
  CHECK(lucas2_binomial(3) == 4);
  CHECK(lucas2_binomial(6) == 18);
  for (Index n = 1; n <= 40; ++n) CHECK(lucas2_binomial(n) == kso_lucas(2, 2, n));
}

TEST_CASE("branch-k plain sum equals the partition polynomial route") {
  // f_k(n) as a plain partition sum over weight n-1 matches counting through
  // the k-th branch directly.
  for (int k = 2; k <= 4; ++k) {
    const auto ones = CoefficientVector::ones(k);
    for (Index n = 1; n <= 20; ++n) {
      Int total = 0;
      for (const auto& a : enumerate_partitions(n - 1, k)) total += multinomial(a);
      CHECK(total == kso_fib(k, ones, k, n));
      CHECK(fib_combinatorial(k, k, n) == total);
    }
  }
}
