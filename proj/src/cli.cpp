#include "orbitkit/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "CLI11.hpp"
#include "orbitkit/bench.hpp"
#include "orbitkit/json_io.hpp"
#include "orbitkit/recovery.hpp"

namespace orbitkit {

namespace {

struct Config {
  std::string rep;
  std::uint64_t seed = 1;
  std::string scalar = "exact";
  std::string out = "json";
  double tolerance = 1e-8;
  double rank_tol = kDefaultRankTol;
  std::size_t samples = 3;
  std::size_t max_retries = 10;
  std::int64_t range = 50;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t n_max = 8;
  std::size_t max_degree = 3;
  std::size_t degree = 2;
  std::string x;
  bool moment = false;
  std::string suite = "tensors";
  std::size_t reps = 3;
};

// A command's outcome: the JSON document plus a few text lines.
struct Outcome {
  Json doc;
  std::vector<std::string> text;
  int code = kExitOk;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
Representation<S> parse_rep(const std::string& descriptor) {
  try {
    return from_descriptor<S>(descriptor);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ScalarKindMismatch ||
        e.code() == ErrorCode::OutOfRange || e.code() == ErrorCode::ParityMismatch)
      throw UsageError(std::string("--rep: ") + e.what());
    throw;
  }
}

std::string scalar_text(const Rational& v) { return to_string(v); }
std::string scalar_text(const Complex& v) {
  std::ostringstream os;
  os << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
  return os.str();
}

template <class S>
std::string vector_text(std::span<const S> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_text(v[i]);
  return s + ")";
}

template <class S>
Outcome cmd_recover(const Config& cfg) {
  const auto rep = parse_rep<S>(cfg.rep);
  const auto x = random_generic_vector<S>(rep.dim(), cfg.seed, cfg.range);
  Outcome o;
  o.doc = {{"command", "recover"}, {"rep", cfg.rep}, {"seed", cfg.seed}, {"scalar", cfg.scalar}};
  o.doc["input"] = to_json<S>(x);
  RecoveryOptions options;
  options.max_retries = cfg.max_retries;
  options.tolerance = cfg.tolerance;
  options.rank_tol = cfg.rank_tol;
  try {
    const auto result =
        recover_orbit<S>({rep, invariant_tensor<S>(rep, x, 2), invariant_tensor<S>(rep, x, 3)}, cfg.seed, options);
    const auto truth = orbit<S>(rep, x);
    const bool match = same_multiset<S>(result.recovered_orbit, truth, cfg.tolerance);
    o.doc["status"] = match ? "ok" : "mismatch";
    Json orbit_json = Json::array();
    for (const auto& y : result.recovered_orbit) orbit_json.push_back(to_json<S>(y));
    o.doc["orbit"] = std::move(orbit_json);
    o.doc["retries_used"] = result.retries_used;
    o.doc["scale"] = to_json(result.scale);
    o.doc["matches_true_orbit"] = match;
    o.text.push_back("status " + std::string(match ? "ok" : "mismatch") + ", retries " +
                     std::to_string(result.retries_used) + ", scale " + scalar_text(result.scale));
    for (const auto& y : result.recovered_orbit) o.text.push_back(vector_text<S>(y));
    o.code = match ? kExitOk : kExitMismatch;
  } catch (const Error& e) {
    o.doc["status"] = std::string(error_code_name(e.code()));
    o.doc["message"] = e.what();
    o.text.push_back(std::string("status ") + e.what());
    o.code = kExitMismatch;
  }
  return o;
}

Outcome cmd_table1(const Config& cfg) {
  const auto rows = reproduce_table1(cfg.seed, cfg.samples);
  Outcome o;
  Json rows_json = Json::array();
  bool all = true;
  for (const auto& row : rows) {
    rows_json.push_back(to_json(row));
    all = all && row.matches();
    o.text.push_back("S" + std::to_string(row.n) + " on C^" + std::to_string(row.n) + "x" + std::to_string(row.d) +
                     ": rank " + std::to_string(row.report.jacobian_rank) + "/" +
                     std::to_string(row.report.ambient_dim) + " -> " + (row.report.contains_basis ? "Yes" : "No") +
                     " (expected " + (row.expected ? "Yes" : "No") + ")" + (row.matches() ? "" : " MISMATCH"));
  }
  o.doc = {{"command", "table1"}, {"seed", cfg.seed}, {"samples", cfg.samples}, {"rows", rows_json}, {"all_match", all}};
  o.text.push_back(all ? "all rows match" : "some rows do not match");
  o.code = all ? kExitOk : kExitMismatch;
  return o;
}

Outcome cmd_invariants(const Config& cfg) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  if (cfg.d < 1) throw UsageError("--d must be at least 1");
  if (cfg.max_degree < 1) throw UsageError("--max-degree must be at least 1");
  const auto polys = enumerate_power_sums(cfg.n, cfg.d, cfg.max_degree);
  Outcome o;
  Json list = Json::array();
  std::vector<std::size_t> by_degree(cfg.max_degree, 0);
  for (const auto& p : polys) {
    list.push_back({{"name", p.name()}, {"degree", p.degree()}, {"label", p.label().columns}});
    ++by_degree[p.degree() - 1];
    o.text.push_back(p.name());
  }
  o.doc = {{"command", "invariants"}, {"n", cfg.n},           {"d", cfg.d},           {"max_degree", cfg.max_degree},
           {"count", polys.size()},   {"counts_by_degree", by_degree}, {"invariants", list}};
  o.text.push_back(std::to_string(polys.size()) + " power sums");
  return o;
}

Outcome cmd_conjecture(const Config& cfg) {
  if (cfg.n_max < 2 || cfg.n_max > 8) throw UsageError("--n-max must lie in 2..8");
  const auto cells = conjecture_scan(cfg.n_max, cfg.seed, cfg.samples);
  Outcome o;
  Json list = Json::array();
  bool all = true;
  for (const auto& c : cells) {
    list.push_back(to_json(c));
    all = all && c.agree();
    o.text.push_back("n=" + std::to_string(c.n) + " d=" + std::to_string(c.d) + ": inequality " +
                     (c.inequality_holds ? "holds" : "fails") + ", Jacobian " + (c.contains_basis ? "Yes" : "No") +
                     (c.agree() ? "" : "  DISAGREE"));
  }
  // monotonicity in d at fixed n is reported, not enforced
  bool monotone = true;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    if (cells[i].n == cells[i - 1].n && cells[i - 1].contains_basis && !cells[i].contains_basis) monotone = false;
  }
  o.doc = {{"command", "conjecture"}, {"n_max", cfg.n_max}, {"seed", cfg.seed}, {"samples", cfg.samples},
           {"cells", list},           {"all_agree", all},   {"monotone_in_d", monotone}};
  o.text.push_back(all ? "inequality and Jacobian verdict agree on every cell" : "disagreement found");
  o.code = all ? kExitOk : kExitMismatch;
  return o;
}

Outcome cmd_cmf(const Config& cfg) {
  if (cfg.n < 3) throw UsageError("--n must be at least 3");
  const auto c = dihedral_cmf_counterexample(cfg.n, cfg.seed);
  Outcome o;
  o.doc = {{"command", "check-dihedral-cmf"}};
  o.doc.update(to_json(c));
  o.text.push_back("x = " + vector_text<Rational>(c.x));
  o.text.push_back("y = " + vector_text<Rational>(c.y));
  o.text.push_back("invariants agree to degree " + std::to_string(c.verdict.invariants_agree_to_degree) + ", " +
                   (c.verdict.same_orbit ? "same orbit" : "different orbits"));
  o.code = c.holds() ? kExitOk : kExitMismatch;
  return o;
}

template <class S>
Outcome cmd_tensor(const Config& cfg) {
  const auto rep = parse_rep<S>(cfg.rep);
  if (cfg.x.empty()) throw UsageError("--x is required");
  Vector<S> x;
  try {
    x = parse_vector<S>(cfg.x);
  } catch (const Error& e) {
    throw UsageError(std::string("--x: ") + e.what());
  }
  if (x.size() != rep.dim())
    throw UsageError("--x has " + std::to_string(x.size()) + " entries, representation has dimension " +
                     std::to_string(rep.dim()));
  if (cfg.degree < 1) throw UsageError("--degree must be at least 1");
  Outcome o;
  o.doc = {{"command", "tensor"}, {"rep", cfg.rep},       {"scalar", cfg.scalar}, {"degree", cfg.degree},
           {"dim", rep.dim()},    {"moment", cfg.moment}, {"x", to_json<S>(x)}};
  if (cfg.moment) {
    if constexpr (std::is_same_v<S, Complex>) {
      const auto m = moment_tensor(rep, x, cfg.degree);
      o.doc["entries"] = to_json(m);
      for (const auto& [key, value] : m.entries()) {
        std::string idx;
        for (auto i : key.first) idx += std::to_string(i) + ",";
        o.text.push_back("(" + idx + std::to_string(key.second) + "*) " + scalar_text(value));
      }
    } else {
      throw UsageError("--moment needs --scalar f64");
    }
  } else {
    const auto t = invariant_tensor<S>(rep, x, cfg.degree);
    o.doc["entries"] = to_json(t);
    for (const auto& [index, value] : t.entries()) {
      std::string idx;
      for (std::size_t k = 0; k < index.size(); ++k) idx += (k ? "," : "") + std::to_string(index[k]);
      o.text.push_back("(" + idx + ") " + scalar_text(value));
    }
  }
  return o;
}

Outcome cmd_bench(const Config& cfg) {
  BenchSuite suite;
  try {
    suite = parse_bench_suite(cfg.suite);
  } catch (const Error& e) {
    throw UsageError(std::string("--suite: ") + e.what());
  }
  const auto records = run_bench(suite, cfg.reps);
  Outcome o;
  Json list = Json::array();
  for (const auto& r : records) {
    list.push_back(to_json(r));
    o.text.push_back(r.case_name + "  |G|=" + std::to_string(r.group_order) + " dim=" + std::to_string(r.dim) + "  " +
                     std::to_string(r.wall_ms) + " ms");
  }
  o.doc = {{"command", "bench"}, {"suite", cfg.suite}, {"reps", cfg.reps}, {"records", list}};
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Invariant tensors, orbit recovery and transcendence checks for finite groups", "orbitkit"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  const auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", cfg.seed, "Random seed"); };
  const auto add_scalar = [&](CLI::App* sub) {
    sub->add_option("--scalar", cfg.scalar, "Scalar path")->check(CLI::IsMember({"exact", "f64"}));
  };

  auto* recover = app.add_subcommand("recover", "Recover a random orbit from its degree 2 and 3 invariants");
  recover->add_option("--rep", cfg.rep, "Representation descriptor")->required();
  add_seed(recover);
  add_scalar(recover);
  recover->add_option("--range", cfg.range, "Entries of x lie in [-range, range]")->check(CLI::PositiveNumber);
  recover->add_option("--max-retries", cfg.max_retries, "Covector redraws before giving up");
  recover->add_option("--tolerance", cfg.tolerance, "F64 comparison tolerance")->check(CLI::NonNegativeNumber);
  recover->add_option("--rank-tol", cfg.rank_tol, "F64 relative rank threshold")->check(CLI::NonNegativeNumber);
  add_common(recover);

  auto* table1 = app.add_subcommand("table1", "Jacobian test for the eight symmetric-group cases");
  add_seed(table1);
  table1->add_option("--samples", cfg.samples, "Sample points per case")->check(CLI::PositiveNumber);
  add_common(table1);

  auto* invariants = app.add_subcommand("invariants", "List the multisymmetric power sums");
  invariants->add_option("--n", cfg.n, "Rows")->required();
  invariants->add_option("--d", cfg.d, "Columns")->required();
  invariants->add_option("--max-degree", cfg.max_degree, "Largest degree");
  add_common(invariants);

  auto* conjecture = app.add_subcommand("conjecture", "Compare the count inequality with the Jacobian verdict");
  conjecture->add_option("--n-max", cfg.n_max, "Largest n (at most 8)");
  add_seed(conjecture);
  conjecture->add_option("--samples", cfg.samples, "Sample points per cell")->check(CLI::PositiveNumber);
  add_common(conjecture);

  auto* cmf = app.add_subcommand("check-dihedral-cmf", "Sign-flip pair in the multiplicity-free dihedral representation");
  cmf->add_option("--n", cfg.n, "Dihedral parameter")->required();
  add_seed(cmf);
  add_common(cmf);

  auto* tensor = app.add_subcommand("tensor", "Invariant or moment tensor of a vector");
  tensor->add_option("--rep", cfg.rep, "Representation descriptor")->required();
  tensor->add_option("--x", cfg.x, "Comma separated entries")->required();
  tensor->add_option("--degree", cfg.degree, "Tensor degree");
  tensor->add_flag("--moment", cfg.moment, "Moment tensor (f64 only)");
  add_scalar(tensor);
  add_common(tensor);

  auto* bench = app.add_subcommand("bench", "Timing harness");
  bench->add_option("--suite", cfg.suite, "tensors, rank or recovery");
  bench->add_option("--reps", cfg.reps, "Timed repetitions")->check(CLI::PositiveNumber);
  add_common(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const bool f64 = cfg.scalar == "f64";
  const std::map<CLI::App*, std::function<Outcome()>> dispatch = {
      {recover, [&] { return f64 ? cmd_recover<Complex>(cfg) : cmd_recover<Rational>(cfg); }},
      {table1, [&] { return cmd_table1(cfg); }},
      {invariants, [&] { return cmd_invariants(cfg); }},
      {conjecture, [&] { return cmd_conjecture(cfg); }},
      {cmf, [&] { return cmd_cmf(cfg); }},
      {tensor, [&] { return f64 ? cmd_tensor<Complex>(cfg) : cmd_tensor<Rational>(cfg); }},
      {bench, [&] { return cmd_bench(cfg); }},
  };

  try {
    const auto outcome = dispatch.at(app.get_subcommands().front())();
    if (cfg.out == "json") {
      out << outcome.doc.dump(2) << "\n";
    } else {
      for (const auto& line : outcome.text) out << line << "\n";
    }
    return outcome.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}

}  // namespace orbitkit
