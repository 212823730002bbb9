#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kbonacci/bigint.hpp"
#include "kbonacci/errors.hpp"

namespace kbonacci {

// A grid point. Unused axes stay at their defaults; i doubles as a matrix
// row index and m as a matrix column or coefficient-set index for the
// matrix-valued identities.
struct Params {
  int k = 0;
  int i = 0;
  Index n = 0;
  Index m = 0;
};

// Set by the evaluation closures whenever a sequence index below the
// boundary window was served by backward extension.
struct EvalContext {
  bool extension_used = false;
};

enum class BranchAxis { none, one_to_k, one_to_k_minus_one };
enum class SecondAxis { none, range, one_to_k, coeff_set };

struct GridDomain {
  int k_lo = 2, k_hi = 2;
  BranchAxis branch = BranchAxis::none;
  Index n_lo = 0, n_hi = 0;
  SecondAxis second = SecondAxis::none;
  Index m_lo = 0, m_hi = 0;
};

// One verifiable relation: two exact-integer evaluations that must agree on
// every point of the declared domain. Statements are written in a local
// shorthand: f_i(n) / l_i(n) are the branch-i values at all-ones
// coefficients, F(n) / G(n) the single generalized Fibonacci / Lucas
// sequences, Fp / Gp the polynomial families.
struct IdentityDescriptor {
  std::string id;
  std::string statement;
  GridDomain domain;
  std::function<Int(const Params&, EvalContext&)> lhs;
  std::function<Int(const Params&, EvalContext&)> rhs;
};

struct IdentityFailure {
  Params params;
  Int lhs;
  Int rhs;
};

struct IdentityReport {
  std::string id;
  long long grid_size = 0;
  std::vector<IdentityFailure> failures;
  bool extension_used = false;
  double ms = 0.0;

  bool pass() const { return failures.empty(); }
};

// Grid overrides; caps clamp the declared domain, k_exact pins a single
// order and must lie inside the declared k range.
struct GridOptions {
  std::optional<int> k_exact;
  std::optional<int> k_max;
  std::optional<Index> n_max;
  std::optional<Index> m_max;
};

const std::vector<IdentityDescriptor>& registry();

// Exhaustive exact comparison of one identity over its (possibly clamped)
// grid. Points are visited in ascending (k, i, n, m) order, so the failure
// list always leads with the smallest failing parameters.
IdentityReport check(const std::string& id, const GridOptions& opts = {});

// Runs every registered identity on its default grid.
std::vector<IdentityReport> sweep(const GridOptions& opts = {});

// The k+i-1 addends of the thm-2.12-addition right-hand side at one point,
// in j order; their sum is the branch-i Lucas value at n+m.
std::vector<Int> theorem_2_12_terms(int k, int i, Index n, Index m);

// Coefficient vectors indexed by the coeff_set axis: all ones, (2,1,...,1),
// and (1,2,...,k).
std::vector<Int> coeff_set_values(int which, int k);

// {"id", "grid", "pass", "failures": [{"params", "lhs", "rhs"}],
//  "extension_used", "ms"} with exact integers as decimal strings. Timing is
// zeroed unless requested so that report bytes are reproducible.
nlohmann::json report_to_json(const IdentityReport& report, bool include_timing = false);

}  // namespace kbonacci
