// kbon: command-line frontend for the kbonacci library.
//
// Subcommands: gen (sequence tables), matrix (companion windows), poly
// (polynomial expansions), binet (closed-form comparison columns), check
// (identity verification reports).
//
// Exit codes: 0 success, 1 identity/tolerance failure, 2 usage error,
// 3 numerical unavailability.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kbonacci/binet.hpp"
#include "kbonacci/identities.hpp"
#include "kbonacci/matrices.hpp"
#include "kbonacci/polynomials.hpp"
#include "kbonacci/sequences.hpp"

namespace {

using kbonacci::CoefficientVector;
using kbonacci::Index;
using kbonacci::Int;
using json = nlohmann::json;

enum class OutputFormat { csv, json_fmt, plain };

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json_fmt;
  if (s == "plain") return OutputFormat::plain;
  throw CLI::ValidationError("--format", "must be one of csv, json, plain");
}

std::string fmt_e(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

CoefficientVector parse_coeffs(const std::string& s) {
  std::vector<long long> vals;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      vals.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) vals.push_back(std::stoll(cur));
  return CoefficientVector::from_ints(vals);
}

std::pair<Index, Index> parse_row_range(const std::string& s) {
  const auto pos = s.find("..");
  if (pos == std::string::npos)
    throw CLI::ValidationError("--rows", "expected a range of the form lo..hi");
  return {std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 2))};
}

struct GenArgs {
  std::string family;
  int k = 0;
  int branch = 0;
  std::string coeffs;
  std::optional<Index> from, to, single;
  std::string format = "plain";
};

int cmd_gen(const GenArgs& a) {
  kbonacci::Family family;
  if (a.family == "ksokf")
    family = kbonacci::Family::ksokf;
  else if (a.family == "ksokl")
    family = kbonacci::Family::ksokl;
  else if (a.family == "gokf")
    family = kbonacci::Family::gokf;
  else if (a.family == "gokl")
    family = kbonacci::Family::gokl;
  else
    throw std::invalid_argument("unknown family '" + a.family + "'");

  const bool branched = family == kbonacci::Family::ksokf || family == kbonacci::Family::ksokl;
  if (branched && a.branch == 0)
    throw std::invalid_argument("families ksokf/ksokl require a branch index -i");
  if (!a.coeffs.empty() && family != kbonacci::Family::ksokf)
    throw std::invalid_argument("--coeffs is only supported for the ksokf family");

  kbonacci::SequenceSpec spec;
  spec.family = family;
  spec.k = a.k;
  spec.branch = branched ? a.branch : 1;
  spec.coefficients = a.coeffs.empty() ? CoefficientVector::ones(a.k) : parse_coeffs(a.coeffs);

  Index lo, hi;
  if (a.single) {
    lo = hi = *a.single;
  } else if (a.from && a.to) {
    lo = *a.from;
    hi = *a.to;
  } else {
    throw std::invalid_argument("provide either -n or both --from and --to");
  }

  const auto table = kbonacci::sequence_table(spec, lo, hi);
  const bool has_window = family != kbonacci::Family::gokf;
  auto extended = [&](Index n) { return has_window && n < 1 - a.k; };

  const OutputFormat fmt = parse_format(a.format);
  if (fmt == OutputFormat::plain) {
    for (const auto& [n, v] : table) {
      std::cout << n << " " << v.str();
      if (extended(n)) std::cout << " *";
      std::cout << "\n";
    }
  } else if (fmt == OutputFormat::csv) {
    std::cout << "n,value,extended\n";
    for (const auto& [n, v] : table)
      std::cout << n << "," << v.str() << "," << (extended(n) ? 1 : 0) << "\n";
  } else {
    json rows = json::array();
    for (const auto& [n, v] : table)
      rows.push_back({{"n", n}, {"value", v.str()}, {"extended", extended(n)}});
    json doc{{"family", a.family}, {"k", a.k}, {"rows", rows}};
    if (branched) doc["i"] = a.branch;
    std::cout << doc.dump(2) << "\n";
  }
  return 0;
}

struct MatrixArgs {
  std::string kind;
  int k = 0;
  Index n = 0;
  bool have_n = false;
  std::string rows;
  std::optional<Index> row_lo, row_hi;
  std::string coeffs;
  std::string format = "plain";
};

void print_square(const kbonacci::ExactMatrix& m, const MatrixArgs& a, OutputFormat fmt) {
  if (fmt == OutputFormat::plain || fmt == OutputFormat::csv) {
    const char* sep = fmt == OutputFormat::csv ? "," : " ";
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) std::cout << (c ? sep : "") << m.at(r, c).str();
      std::cout << "\n";
    }
  } else {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
      rows.push_back(row);
    }
    json doc{{"kind", a.kind}, {"k", a.k}, {"rows", rows}};
    if (a.have_n) doc["n"] = a.n;
    std::cout << doc.dump(2) << "\n";
  }
}

void print_window(const kbonacci::InfiniteMatrixWindow& w, const MatrixArgs& a,
                  OutputFormat fmt) {
  if (fmt == OutputFormat::plain || fmt == OutputFormat::csv) {
    const char* sep = fmt == OutputFormat::csv ? "," : " ";
    for (Index n = w.row_lo; n <= w.row_hi; ++n) {
      std::cout << n << (fmt == OutputFormat::csv ? "," : ": ");
      const auto& row = w.row(n);
      for (size_t c = 0; c < row.size(); ++c) std::cout << (c ? sep : "") << row[c].str();
      std::cout << "\n";
    }
  } else {
    json rows = json::array();
    for (Index n = w.row_lo; n <= w.row_hi; ++n) {
      json entries = json::array();
      for (const Int& v : w.row(n)) entries.push_back(v.str());
      rows.push_back({{"n", n}, {"entries", entries}});
    }
    std::cout << json{{"kind", a.kind},
                      {"k", a.k},
                      {"row_lo", w.row_lo},
                      {"row_hi", w.row_hi},
                      {"rows", rows}}
                     .dump(2)
              << "\n";
  }
}

int cmd_matrix(const MatrixArgs& a) {
  const OutputFormat fmt = parse_format(a.format);
  const CoefficientVector c =
      a.coeffs.empty() ? CoefficientVector::ones(a.k) : parse_coeffs(a.coeffs);

  if (a.kind == "f_tilde" || a.kind == "l_tilde" || a.kind == "l0") {
    if (!a.coeffs.empty() && a.kind != "f_tilde")
      throw std::invalid_argument("--coeffs is only supported for f_tilde and the windows");
    kbonacci::ExactMatrix m;
    if (a.kind == "f_tilde")
      m = kbonacci::f_tilde(a.k, c, a.n);
    else if (a.kind == "l_tilde")
      m = kbonacci::l_tilde(a.k, a.n);
    else
      m = kbonacci::l_tilde_0(a.k);
    print_square(m, a, fmt);
    return 0;
  }
  if (a.kind == "a_window" || a.kind == "d_window") {
    Index lo, hi;
    if (a.row_lo && a.row_hi) {
      lo = *a.row_lo;
      hi = *a.row_hi;
    } else if (!a.rows.empty()) {
      std::tie(lo, hi) = parse_row_range(a.rows);
    } else {
      throw std::invalid_argument("window kinds need --rows lo..hi (or --row-lo/--row-hi)");
    }
    const auto w = a.kind == "a_window" ? kbonacci::a_infty_window(a.k, c, lo, hi)
                                        : kbonacci::d_infty_window(a.k, c, lo, hi);
    print_window(w, a, fmt);
    return 0;
  }
  throw std::invalid_argument("unknown matrix kind '" + a.kind + "'");
}

struct PolyArgs {
  std::string kind;
  std::string method = "recurrence";
  int k = 0;
  Index n = 0;
  std::string format = "plain";
};

int cmd_poly(const PolyArgs& a) {
  kbonacci::SparsePolynomial p(a.k);
  if (a.kind == "fib")
    p = a.method == "partition" ? kbonacci::fib_poly_partition(a.k, a.n)
                                : kbonacci::fib_poly(a.k, a.n);
  else if (a.kind == "lucas")
    p = a.method == "partition" ? kbonacci::lucas_poly_partition(a.k, a.n)
                                : kbonacci::lucas_poly(a.k, a.n);
  else
    throw std::invalid_argument("unknown polynomial kind '" + a.kind + "'");
  if (a.method != "partition" && a.method != "recurrence")
    throw std::invalid_argument("--method must be recurrence or partition");

  const OutputFormat fmt = parse_format(a.format);
  if (fmt == OutputFormat::plain) {
    std::cout << p.to_plain_string() << "\n";
  } else if (fmt == OutputFormat::csv) {
    for (int j = 1; j <= a.k; ++j) std::cout << "exp" << j << ",";
    std::cout << "coef\n";
    for (const auto& [exp, coef] : p.terms()) {
      for (int e : exp) std::cout << e << ",";
      std::cout << coef.str() << "\n";
    }
  } else {
    std::cout << p.to_json_string() << "\n";
  }
  return 0;
}

struct BinetArgs {
  int k = 0;
  int branch = 0;
  std::optional<Index> from, to, single;
  double tolerance = 1e-9;
  std::string format = "plain";
};

int cmd_binet(const BinetArgs& a) {
  Index lo, hi;
  if (a.single) {
    lo = hi = *a.single;
  } else if (a.from && a.to) {
    lo = *a.from;
    hi = *a.to;
  } else {
    throw std::invalid_argument("provide either -n or both --from and --to");
  }
  if (lo > hi) throw std::invalid_argument("--from must not exceed --to");

  const auto roots = kbonacci::core_roots(a.k, CoefficientVector::ones(a.k));

  struct Row {
    Index n;
    Int exact;
    double binet, vand, rel;
  };
  std::vector<Row> out;
  bool tolerance_hit = false;
  for (Index n = lo; n <= hi; ++n) {
    const Int exact = kbonacci::kso_lucas(a.k, a.branch, n);
    const double b = kbonacci::binet_lucas(roots, a.branch, n).value;
    const double v = kbonacci::vandermonde_lucas(roots, a.branch, n).value;
    const double exact_d = exact.convert_to<double>();
    const double denom = std::max(1.0, std::fabs(exact_d));
    const double rel = std::max(std::fabs(b - exact_d), std::fabs(v - exact_d)) / denom;
    if (rel > a.tolerance) tolerance_hit = true;
    out.push_back(Row{n, exact, b, v, rel});
  }

  const OutputFormat fmt = parse_format(a.format);
  if (fmt == OutputFormat::plain) {
    for (const auto& r : out)
      std::cout << r.n << " " << r.exact.str() << " " << fmt_e(r.binet) << " " << fmt_e(r.vand)
                << " " << fmt_e(r.rel) << "\n";
  } else if (fmt == OutputFormat::csv) {
    std::cout << "n,exact,binet,vandermonde,rel_error\n";
    for (const auto& r : out)
      std::cout << r.n << "," << r.exact.str() << "," << fmt_e(r.binet) << "," << fmt_e(r.vand)
                << "," << fmt_e(r.rel) << "\n";
  } else {
    json rows = json::array();
    for (const auto& r : out)
      rows.push_back({{"n", r.n},
                      {"exact", r.exact.str()},
                      {"binet", fmt_e(r.binet)},
                      {"vandermonde", fmt_e(r.vand)},
                      {"rel_error", fmt_e(r.rel)}});
    std::cout << json{{"k", a.k}, {"i", a.branch}, {"tolerance", fmt_e(a.tolerance)},
                      {"rows", rows}}
                     .dump(2)
              << "\n";
  }
  return tolerance_hit ? 1 : 0;
}

struct CheckArgs {
  std::string id;
  bool all = false;
  std::optional<int> k_exact, k_max;
  std::optional<Index> n_max, m_max;
  bool timing = false;
  std::string format = "json";
};

int cmd_check(const CheckArgs& a) {
  if (a.id.empty() && !a.all) throw std::invalid_argument("give an identity id or --all");

  kbonacci::GridOptions opts;
  opts.k_exact = a.k_exact;
  opts.k_max = a.k_max;
  opts.n_max = a.n_max;
  opts.m_max = a.m_max;

  std::vector<kbonacci::IdentityReport> reports;
  if (a.all)
    reports = kbonacci::sweep(opts);
  else
    reports.push_back(kbonacci::check(a.id, opts));

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass();

  const OutputFormat fmt = parse_format(a.format);
  if (fmt == OutputFormat::json_fmt) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(kbonacci::report_to_json(r, a.timing));
    std::cout << arr.dump(2) << "\n";
  } else if (fmt == OutputFormat::csv) {
    std::cout << "id,pass,grid,failures,extension_used,ms\n";
    for (const auto& r : reports)
      std::cout << r.id << "," << (r.pass() ? 1 : 0) << "," << r.grid_size << ","
                << r.failures.size() << "," << (r.extension_used ? 1 : 0) << ","
                << fmt_e(a.timing ? r.ms : 0.0) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << r.id << ": " << (r.pass() ? "PASS" : "FAIL") << " grid=" << r.grid_size
                << " extended=" << (r.extension_used ? 1 : 0);
      if (a.timing) std::cout << " ms=" << fmt_e(r.ms);
      std::cout << "\n";
      for (const auto& f : r.failures)
        std::cout << "  at k=" << f.params.k << " i=" << f.params.i << " n=" << f.params.n
                  << " m=" << f.params.m << ": lhs=" << f.lhs.str() << " rhs=" << f.rhs.str()
                  << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generalized order-k Fibonacci/Lucas toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* sgen = app.add_subcommand("gen", "emit a sequence table");
  sgen->add_option("--family", gen.family, "ksokf | ksokl | gokf | gokl")->required();
  sgen->add_option("-k", gen.k, "order")->required();
  sgen->add_option("-i", gen.branch, "branch index (ksokf/ksokl)");
  sgen->add_option("--coeffs", gen.coeffs, "comma-separated coefficients (ksokf only)");
  sgen->add_option("--from", gen.from, "first index");
  sgen->add_option("--to", gen.to, "last index");
  sgen->add_option("-n", gen.single, "single index");
  sgen->add_option("--format", gen.format, "csv | json | plain");

  MatrixArgs mat;
  auto* smat = app.add_subcommand("matrix", "emit a matrix or orbit window");
  smat->add_option("kind", mat.kind, "f_tilde | l_tilde | l0 | a_window | d_window")->required();
  smat->add_option("-k", mat.k, "order")->required();
  auto* nopt = smat->add_option("-n", mat.n, "window index (f_tilde/l_tilde)");
  smat->add_option("--rows", mat.rows, "row range lo..hi (windows)");
  smat->add_option("--row-lo", mat.row_lo, "first row (windows)");
  smat->add_option("--row-hi", mat.row_hi, "last row (windows)");
  smat->add_option("--coeffs", mat.coeffs, "comma-separated coefficients");
  smat->add_option("--format", mat.format, "csv | json | plain");

  PolyArgs poly;
  auto* spoly = app.add_subcommand("poly", "emit a polynomial expansion");
  spoly->add_option("kind", poly.kind, "fib | lucas")->required();
  spoly->add_option("--method", poly.method, "recurrence | partition");
  spoly->add_option("-k", poly.k, "number of variables")->required();
  spoly->add_option("-n", poly.n, "index")->required();
  spoly->add_option("--format", poly.format, "csv | json | plain");

  BinetArgs binet;
  auto* sbinet = app.add_subcommand("binet", "compare exact values with closed forms");
  sbinet->add_option("-k", binet.k, "order")->required();
  sbinet->add_option("-i", binet.branch, "branch index")->required();
  sbinet->add_option("--from", binet.from, "first index");
  sbinet->add_option("--to", binet.to, "last index");
  sbinet->add_option("-n", binet.single, "single index");
  sbinet->add_option("--tolerance", binet.tolerance, "relative error threshold");
  sbinet->add_option("--format", binet.format, "csv | json | plain");

  CheckArgs chk;
  auto* schk = app.add_subcommand("check", "verify identities over parameter grids");
  schk->add_option("id", chk.id, "identity id (see registry)");
  schk->add_flag("--all", chk.all, "run every registered identity");
  schk->add_option("-k", chk.k_exact, "pin the order");
  schk->add_option("--k-max", chk.k_max, "cap the order range");
  schk->add_option("--n-max", chk.n_max, "cap the index range");
  schk->add_option("--m-max", chk.m_max, "cap the shift range");
  schk->add_flag("--timing", chk.timing, "include real elapsed ms in reports");
  schk->add_option("--format", chk.format, "csv | json | plain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sgen->parsed()) return cmd_gen(gen);
    if (smat->parsed()) {
      mat.have_n = nopt->count() > 0;
      return cmd_matrix(mat);
    }
    if (spoly->parsed()) return cmd_poly(poly);
    if (sbinet->parsed()) return cmd_binet(binet);
    if (schk->parsed()) return cmd_check(chk);
  } catch (const kbonacci::repeated_roots& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const kbonacci::no_convergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const kbonacci::ill_conditioned& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const kbonacci::range_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
