#include "kbonacci/identities.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>

#include "kbonacci/matrices.hpp"
#include "kbonacci/partitions.hpp"
#include "kbonacci/polynomials.hpp"
#include "kbonacci/sequences.hpp"

namespace kbonacci {

namespace {

// Recurrence-backend accessors. Every identity side below goes through
// these, so a failure implicates the stated formula rather than a backend.
Int fib(EvalContext& ctx, int k, int i, Index n) {
  if (n < 1 - k) ctx.extension_used = true;
  return kso_fib(k, CoefficientVector::ones(k), i, n);
}

Int luc(EvalContext& ctx, int k, int i, Index n) {
  if (n < 1 - k) ctx.extension_used = true;
  return kso_lucas(k, i, n);
}

Int gokl(EvalContext& ctx, int k, Index n) {
  if (n < 1 - k) ctx.extension_used = true;
  return gok_lucas(k, n);
}

Int triangle(Index x) { return Int(x) * Int(x + 1) / 2; }

std::vector<Int> thm_2_12_terms_impl(EvalContext* ctx, int k, int i, Index n, Index m) {
  if (k < 2) throw invalid_order("order k must be >= 2");
  if (i < 1 || i > k - 1) throw invalid_branch("thm-2.12 requires 1 <= i <= k-1");
  EvalContext local;
  EvalContext& c = ctx ? *ctx : local;
  std::vector<Int> terms;
  terms.reserve(static_cast<size_t>(k + i - 1));
  for (int j = 1; j <= k + i - 1; ++j) {
    const int s_lo = j <= i ? 1 : j - i + 1;
    const int s_hi = std::min(j, k);
    Int inner = 0;
    for (int s = s_lo; s <= s_hi; ++s) inner += fib(c, k, s, n);
    terms.push_back(luc(c, k, k, m - j) * inner);
  }
  return terms;
}

using Side = std::function<Int(const Params&, EvalContext&)>;

IdentityDescriptor make(std::string id, std::string statement, GridDomain domain, Side lhs,
                        Side rhs) {
  return IdentityDescriptor{std::move(id), std::move(statement), domain, std::move(lhs),
                            std::move(rhs)};
}

std::vector<IdentityDescriptor> build_registry() {
  std::vector<IdentityDescriptor> reg;

  reg.push_back(make(
      "thm-2.6", "l_k(n) = k f_k(n+1) - sum_{j=2..k} (k-j+1) f_k(n+2-j)",
      {2, 6, BranchAxis::none, 0, 40},
      [](const Params& p, EvalContext& c) { return luc(c, p.k, p.k, p.n); },
      [](const Params& p, EvalContext& c) {
        Int acc = Int(p.k) * fib(c, p.k, p.k, p.n + 1);
        for (int j = 2; j <= p.k; ++j) acc -= Int(p.k - j + 1) * fib(c, p.k, p.k, p.n + 2 - j);
        return acc;
      }));

  reg.push_back(make(
      "thm-2.7", "Gp(k,n) = k Fp(k,n) - sum_{j=2..k} (k-j+1) t_{j-1} Fp(k,n+1-j), per test point",
      {2, 4, BranchAxis::none, 0, 12, SecondAxis::coeff_set},
      [](const Params& p, EvalContext&) {
        const CoefficientVector t(coeff_set_values(static_cast<int>(p.m), p.k));
        return eval_poly(lucas_poly(p.k, p.n), t);
      },
      [](const Params& p, EvalContext&) {
        const CoefficientVector t(coeff_set_values(static_cast<int>(p.m), p.k));
        Int acc = Int(p.k) * eval_poly(fib_poly(p.k, p.n), t);
        for (int j = 2; j <= p.k; ++j)
          acc -= Int(p.k - j + 1) * t.coef(j - 1) * eval_poly(fib_poly(p.k, p.n + 1 - j), t);
        return acc;
      }));

  reg.push_back(make(
      "thm-2.8", "l_k(n) = sum_{j=1..k} j f_k(n+1-j)",
      {2, 6, BranchAxis::none, 0, 40},
      [](const Params& p, EvalContext& c) { return luc(c, p.k, p.k, p.n); },
      [](const Params& p, EvalContext& c) {
        Int acc = 0;
        for (int j = 1; j <= p.k; ++j) acc += Int(j) * fib(c, p.k, p.k, p.n + 1 - j);
        return acc;
      }));

  reg.push_back(make(
      "lemma-2.9", "l_i(n) = l_k(n-1) if i=1; sum_{m=1..i} l_k(n-m) if 1<i<k; l_k(n) if i=k",
      {2, 6, BranchAxis::one_to_k, 0, 40},
      [](const Params& p, EvalContext& c) { return luc(c, p.k, p.i, p.n); },
      [](const Params& p, EvalContext& c) {
        if (p.i == 1) return luc(c, p.k, p.k, p.n - 1);
        if (p.i == p.k) return luc(c, p.k, p.k, p.n);
        Int acc = 0;
        for (int m = 1; m <= p.i; ++m) acc += luc(c, p.k, p.k, p.n - m);
        return acc;
      }));

  reg.push_back(make(
      "thm-2.10-i", "l_i(n) = sum_{j=1..k+i-1} d_j f_k(n-j) with triangular coefficients d_j",
      {3, 6, BranchAxis::one_to_k, 0, 40},
      [](const Params& p, EvalContext& c) { return luc(c, p.k, p.i, p.n); },
      [](const Params& p, EvalContext& c) {
        Int acc = 0;
        for (int j = 1; j <= p.k + p.i - 1; ++j) {
          Int d;
          if (j <= p.i)
            d = triangle(j);
          else if (j <= p.k - 1)
            d = triangle(j) - triangle(j - p.i);
          else
            d = triangle(p.k) - triangle(j - p.i);
          acc += d * fib(c, p.k, p.k, p.n - j);
        }
        return acc;
      }));

  reg.push_back(make(
      "thm-2.10-ii",
      "l_i(n) via k f_k - weighted tails, split by i = 1, 1 < i < k, i = k",
      {2, 6, BranchAxis::one_to_k, 0, 40},
      [](const Params& p, EvalContext& c) { return luc(c, p.k, p.i, p.n); },
      [](const Params& p, EvalContext& c) {
        auto block = [&](Index base) {
          Int acc = Int(p.k) * fib(c, p.k, p.k, base + 1);
          for (int j = 2; j <= p.k; ++j) acc -= Int(p.k - j + 1) * fib(c, p.k, p.k, base + 2 - j);
          return acc;
        };
        if (p.i == 1) return block(p.n - 1);
        if (p.i == p.k) return block(p.n);
        Int acc = 0;
        for (int m = 1; m <= p.i; ++m) acc += block(p.n - m);
        return acc;
      }));

  reg.push_back(make(
      "thm-2.10-iii",
      "l_i(n) = sum_j j f_k(n-j) if i=1; sum_{m<=i} sum_j j f_k(n-m-j+1) if 1<i<k; "
      "sum_j j f_k(n+1-j) if i=k",
      {2, 6, BranchAxis::one_to_k, 0, 40},
      [](const Params& p, EvalContext& c) { return luc(c, p.k, p.i, p.n); },
      [](const Params& p, EvalContext& c) {
        auto weighted = [&](Index base) {
          Int acc = 0;
          for (int j = 1; j <= p.k; ++j) acc += Int(j) * fib(c, p.k, p.k, base + 1 - j);
          return acc;
        };
        if (p.i == 1) return weighted(p.n - 1);
        if (p.i == p.k) return weighted(p.n);
        Int acc = 0;
        for (int m = 1; m <= p.i; ++m) acc += weighted(p.n - m);
        return acc;
      }));

  reg.push_back(make(
      "thm-2.12-addition",
      "l_i(n+m) = sum_j l_k(m-j) * (windowed sums of f_s(n)), j = 1..k+i-1",
      {2, 5, BranchAxis::one_to_k_minus_one, 0, 15, SecondAxis::range, 0, 15},
      [](const Params& p, EvalContext& c) { return luc(c, p.k, p.i, p.n + p.m); },
      [](const Params& p, EvalContext& c) {
        Int acc = 0;
        for (Int& t : thm_2_12_terms_impl(&c, p.k, p.i, p.n, p.m)) acc += t;
        return acc;
      }));

  reg.push_back(make(
      "gokf-gokl", "G(n) = k F(n+k-1) - sum_{j=2..k} (k-j+1) F(n+k-j)",
      {2, 6, BranchAxis::none, 1, 40},
      [](const Params& p, EvalContext& c) { return gokl(c, p.k, p.n); },
      [](const Params& p, EvalContext&) {
        Int acc = Int(p.k) * gok_fib(p.k, p.n + p.k - 1);
        for (int j = 2; j <= p.k; ++j) acc -= Int(p.k - j + 1) * gok_fib(p.k, p.n + p.k - j);
        return acc;
      }));

  reg.push_back(make(
      "ex-2.5-k2", "l_2(n) = 2 f_2(n+1) - f_2(n) at k = 2",
      {2, 2, BranchAxis::none, 0, 40},
      [](const Params& p, EvalContext& c) { return luc(c, 2, 2, p.n); },
      [](const Params& p, EvalContext& c) {
        return Int(2) * fib(c, 2, 2, p.n + 1) - fib(c, 2, 2, p.n);
      }));

  reg.push_back(make(
      "ex-2.5-k3", "l_3(n) = 3 f_3(n+1) - 2 f_3(n) - f_3(n-1) at k = 3",
      {3, 3, BranchAxis::none, 0, 40},
      [](const Params& p, EvalContext& c) { return luc(c, 3, 3, p.n); },
      [](const Params& p, EvalContext& c) {
        return Int(3) * fib(c, 3, 3, p.n + 1) - Int(2) * fib(c, 3, 3, p.n) - fib(c, 3, 3, p.n - 1);
      }));

  reg.push_back(make(
      "sec-2.2-fib-branches", "f_i(n) = sum_{m=1..k-i+1} f_k(n-m+1)",
      {2, 6, BranchAxis::one_to_k, 0, 40},
      [](const Params& p, EvalContext& c) { return fib(c, p.k, p.i, p.n); },
      [](const Params& p, EvalContext& c) {
        Int acc = 0;
        for (int m = 1; m <= p.k - p.i + 1; ++m) acc += fib(c, p.k, p.k, p.n - m + 1);
        return acc;
      }));

  reg.push_back(make(
      "index-iteration-fib", "f_k(n) = F(k+n-2)",
      {2, 6, BranchAxis::none, 1, 40},
      [](const Params& p, EvalContext& c) { return fib(c, p.k, p.k, p.n); },
      [](const Params& p, EvalContext&) { return gok_fib(p.k, p.k + p.n - 2); }));

  reg.push_back(make(
      "index-iteration-lucas", "l_k(n) = G(n)",
      {2, 6, BranchAxis::none, -1, 40},
      [](const Params& p, EvalContext& c) { return luc(c, p.k, p.k, p.n); },
      [](const Params& p, EvalContext& c) { return gokl(c, p.k, p.n); }));

  reg.push_back(make(
      "cor-2.17", "l_i(n) from hook-weighted partition sums of f_k",
      {2, 5, BranchAxis::one_to_k, 1, 25},
      [](const Params& p, EvalContext&) { return lucas_combinatorial_2_17(p.k, p.i, p.n); },
      [](const Params& p, EvalContext& c) { return luc(c, p.k, p.i, p.n); }));

  reg.push_back(make(
      "cor-2.18", "l_i(n) from n/|a|-weighted partition sums",
      {2, 5, BranchAxis::one_to_k, 1, 25},
      [](const Params& p, EvalContext&) { return lucas_combinatorial_2_18(p.k, p.i, p.n); },
      [](const Params& p, EvalContext& c) { return luc(c, p.k, p.i, p.n); }));

  reg.push_back(make(
      "cor-2.19", "l_i(n) from j-weighted plain partition sums",
      {2, 5, BranchAxis::one_to_k, 1, 25},
      [](const Params& p, EvalContext&) { return lucas_combinatorial_2_19(p.k, p.i, p.n); },
      [](const Params& p, EvalContext& c) { return luc(c, p.k, p.i, p.n); }));

  reg.push_back(make(
      "cor-2.20", "l_2(n) = sum_{j=1,2} j sum_s C(n-j-s, s) at k = 2",
      {2, 2, BranchAxis::none, 1, 40},
      [](const Params& p, EvalContext&) { return lucas2_binomial(p.n); },
      [](const Params& p, EvalContext& c) { return luc(c, 2, 2, p.n); }));

  reg.push_back(make(
      "lemma-2.3-matrix", "Ltilde(n+1) = A1^(n+1) Ltilde(0), entrywise over (i, m)",
      {2, 5, BranchAxis::one_to_k, 0, 30, SecondAxis::one_to_k},
      [](const Params& p, EvalContext&) { return l_tilde(p.k, p.n + 1).at(p.i - 1, static_cast<int>(p.m) - 1); },
      [](const Params& p, EvalContext&) {
        const ExactMatrix a1 = companion(p.k, CoefficientVector::ones(p.k));
        return (mat_power(a1, p.n + 1) * l_tilde_0(p.k)).at(p.i - 1, static_cast<int>(p.m) - 1);
      }));

  reg.push_back(make(
      "lemma-2.4-matrix", "Ltilde(n) = Ftilde(n) Ltilde(0), entrywise over (i, m)",
      {2, 5, BranchAxis::one_to_k, 0, 30, SecondAxis::one_to_k},
      [](const Params& p, EvalContext&) { return l_tilde(p.k, p.n).at(p.i - 1, static_cast<int>(p.m) - 1); },
      [](const Params& p, EvalContext&) {
        return (f_tilde(p.k, CoefficientVector::ones(p.k), p.n) * l_tilde_0(p.k))
            .at(p.i - 1, static_cast<int>(p.m) - 1);
      }));

  reg.push_back(make(
      "trace-lucas-poly", "trace(A_(k)^n) = Gp(k,n) evaluated at the test coefficients",
      {2, 4, BranchAxis::none, 0, 15, SecondAxis::coeff_set},
      [](const Params& p, EvalContext&) {
        const CoefficientVector t(coeff_set_values(static_cast<int>(p.m), p.k));
        return mat_power(orbit_companion(p.k, t), p.n).trace();
      },
      [](const Params& p, EvalContext&) {
        const CoefficientVector t(coeff_set_values(static_cast<int>(p.m), p.k));
        return eval_poly(lucas_poly(p.k, p.n), t);
      }));

  return reg;
}

}  // namespace

std::vector<Int> coeff_set_values(int which, int k) {
  std::vector<Int> t(static_cast<size_t>(k), Int(1));
  switch (which) {
    case 0: break;
    case 1: t[0] = 2; break;
    case 2:
      for (int j = 0; j < k; ++j) t[static_cast<size_t>(j)] = j + 1;
      break;
    default: throw domain_violation("coefficient set index must lie in 0..2");
  }
  return t;
}

std::vector<Int> theorem_2_12_terms(int k, int i, Index n, Index m) {
  return thm_2_12_terms_impl(nullptr, k, i, n, m);
}

const std::vector<IdentityDescriptor>& registry() {
  static const std::vector<IdentityDescriptor> reg = build_registry();
  return reg;
}

IdentityReport check(const std::string& id, const GridOptions& opts) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(),
                               [&](const IdentityDescriptor& d) { return d.id == id; });
  if (it == reg.end()) throw unknown_identity("no identity registered under id '" + id + "'");
  const IdentityDescriptor& d = *it;

  int k_lo = d.domain.k_lo, k_hi = d.domain.k_hi;
  if (opts.k_exact) {
    if (*opts.k_exact < k_lo || *opts.k_exact > k_hi)
      throw domain_violation("k = " + std::to_string(*opts.k_exact) + " outside declared domain " +
                             std::to_string(k_lo) + ".." + std::to_string(k_hi) + " of '" + id +
                             "'");
    k_lo = k_hi = *opts.k_exact;
  }
  if (opts.k_max) k_hi = std::min(k_hi, *opts.k_max);
  Index n_hi = d.domain.n_hi;
  if (opts.n_max) n_hi = std::min(n_hi, *opts.n_max);
  Index m_hi = d.domain.m_hi;
  if (opts.m_max && d.domain.second == SecondAxis::range) m_hi = std::min(m_hi, *opts.m_max);

  IdentityReport report;
  report.id = d.id;
  const auto started = std::chrono::steady_clock::now();

  EvalContext ctx;
  for (int k = k_lo; k <= k_hi; ++k) {
    std::vector<int> branches;
    switch (d.domain.branch) {
      case BranchAxis::none: branches = {0}; break;
      case BranchAxis::one_to_k:
        for (int i = 1; i <= k; ++i) branches.push_back(i);
        break;
      case BranchAxis::one_to_k_minus_one:
        for (int i = 1; i <= k - 1; ++i) branches.push_back(i);
        break;
    }
    for (int i : branches) {
      for (Index n = d.domain.n_lo; n <= n_hi; ++n) {
        std::vector<Index> seconds;
        switch (d.domain.second) {
          case SecondAxis::none: seconds = {0}; break;
          case SecondAxis::range:
            for (Index m = d.domain.m_lo; m <= m_hi; ++m) seconds.push_back(m);
            break;
          case SecondAxis::one_to_k:
            for (Index m = 1; m <= k; ++m) seconds.push_back(m);
            break;
          case SecondAxis::coeff_set:
            seconds = {0, 1, 2};
            break;
        }
        for (Index m : seconds) {
          const Params p{k, i, n, m};
          const Int left = d.lhs(p, ctx);
          const Int right = d.rhs(p, ctx);
          ++report.grid_size;
          if (left != right) report.failures.push_back(IdentityFailure{p, left, right});
        }
      }
    }
  }

  report.extension_used = ctx.extension_used;
  report.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                  .count();
  return report;
}

std::vector<IdentityReport> sweep(const GridOptions& opts) {
  std::vector<IdentityReport> reports;
  reports.reserve(registry().size());
  for (const auto& d : registry()) {
    GridOptions local = opts;
    // k_exact outside an identity's declared range restricts the sweep to
    // the identities that can honor it, instead of failing the whole run.
    if (local.k_exact && (*local.k_exact < d.domain.k_lo || *local.k_exact > d.domain.k_hi)) {
      local.k_exact.reset();
      local.k_max = 1;  // empty grid for this identity
    }
    reports.push_back(check(d.id, local));
  }
  return reports;
}

nlohmann::json report_to_json(const IdentityReport& report, bool include_timing) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"params",
                         {{"k", f.params.k},
                          {"i", f.params.i},
                          {"n", f.params.n},
                          {"m", f.params.m}}},
                        {"lhs", f.lhs.str()},
                        {"rhs", f.rhs.str()}});
  }
  return nlohmann::json{{"id", report.id},
                        {"grid", report.grid_size},
                        {"pass", report.pass()},
                        {"failures", failures},
                        {"extension_used", report.extension_used},
                        {"ms", include_timing ? report.ms : 0.0}};
}

}  // namespace kbonacci
