#include "orbitkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "orbitkit/error.hpp"
#include "orbitkit/recovery.hpp"
#include "orbitkit/transcendence.hpp"

namespace orbitkit {

BenchSuite parse_bench_suite(std::string_view name) {
  if (name == "tensors") return BenchSuite::Tensors;
  if (name == "rank") return BenchSuite::Rank;
  if (name == "recovery") return BenchSuite::Recovery;
  throw Error(ErrorCode::ParseError, "unknown bench suite '" + std::string(name) + "'");
}

std::string_view bench_suite_name(BenchSuite suite) {
  switch (suite) {
    case BenchSuite::Tensors: return "tensors";
    case BenchSuite::Rank: return "rank";
    case BenchSuite::Recovery: return "recovery";
  }
  return "?";
}

namespace {

double median_ms(std::size_t reps, const std::function<void()>& body) {
  body();  // warm-up
  std::vector<double> times;
  for (std::size_t r = 0; r < std::max<std::size_t>(reps, 1); ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(times.begin(), times.end());
  const std::size_t m = times.size();
  const double med = m % 2 ? times[m / 2] : 0.5 * (times[m / 2 - 1] + times[m / 2]);
  // keep the record strictly positive even below clock resolution
  return std::max(med, 1e-6);
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

std::vector<BenchRecord> run_bench(BenchSuite suite, std::size_t reps) {
  std::vector<BenchRecord> records;
  if (suite == BenchSuite::Tensors || suite == BenchSuite::Recovery) {
    const std::vector<std::string> descriptors = suite == BenchSuite::Tensors
                                                     ? std::vector<std::string>{"regular:dihedral:3", "regular:cyclic:8",
                                                                                "regular:dihedral:6", "regular:symmetric:4"}
                                                     : std::vector<std::string>{"regular:symmetric:4"};
    for (const auto& desc : descriptors) {
      const auto rep = from_descriptor<Rational>(desc);
      const auto x = random_generic_vector<Rational>(rep.dim(), 1, 50);
      BenchRecord rec{(suite == BenchSuite::Tensors ? "T3 " : "recover ") + desc, rep.group().order(), rep.dim(), 0.0,
                      ScalarKind::Exact};
      if (suite == BenchSuite::Tensors) {
        rec.wall_ms = median_ms(reps, [&] { (void)invariant_tensor<Rational>(rep, x, 3); });
      } else {
        const RecoveryInput<Rational> input{rep, invariant_tensor<Rational>(rep, x, 2),
                                            invariant_tensor<Rational>(rep, x, 3)};
        rec.wall_ms = median_ms(reps, [&] { (void)recover_orbit(input, 1); });
      }
      records.push_back(std::move(rec));
    }
  } else {
    for (const auto& c : table1_cases()) {
      BenchRecord rec{"jacobian-rank n=" + std::to_string(c.n) + " d=" + std::to_string(c.d), factorial(c.n),
                      c.n * c.d, 0.0, ScalarKind::Exact};
      rec.wall_ms = median_ms(reps, [&] { (void)jacobian_rank_at(c.n, c.d, 1); });
      records.push_back(std::move(rec));
    }
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const BenchRecord& a, const BenchRecord& b) { return a.group_order < b.group_order; });
  return records;
}

}  // namespace orbitkit
