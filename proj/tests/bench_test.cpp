#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "orbitkit/bench.hpp"
#include "orbitkit/error.hpp"

using namespace orbitkit;

namespace {

// Least-squares slope of log(time) against log(dim).
double loglog_slope(const std::vector<BenchRecord>& records) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(records.size());
  for (const auto& r : records) {
    const double x = std::log(static_cast<double>(r.dim));
    const double y = std::log(r.wall_ms);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

bool sorted_by_order(const std::vector<BenchRecord>& records) {
  return std::is_sorted(records.begin(), records.end(),
                        [](const BenchRecord& a, const BenchRecord& b) { return a.group_order < b.group_order; });
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(parse_bench_suite("tensors") == BenchSuite::Tensors);
  CHECK(parse_bench_suite("rank") == BenchSuite::Rank);
  CHECK(parse_bench_suite("recovery") == BenchSuite::Recovery);
  CHECK(bench_suite_name(BenchSuite::Rank) == "rank");
  CHECK_THROWS_AS(parse_bench_suite("everything"), Error);
}

TEST_CASE("tensor suite") {
  const auto records = run_bench(BenchSuite::Tensors, 3);
  REQUIRE(records.size() == 4);
  CHECK(sorted_by_order(records));
  std::vector<std::size_t> orders;
  for (const auto& r : records) {
    CHECK(r.wall_ms > 0);
    orders.push_back(r.group_order);
  }
  CHECK(orders == std::vector<std::size_t>{6, 8, 12, 24});
  const double slope = loglog_slope(records);
  MESSAGE("T3 log-log slope against dim: ", slope);
  CHECK(slope <= 4.2);
}

TEST_CASE("rank suite") {
  const auto records = run_bench(BenchSuite::Rank, 3);
  CHECK(records.size() == 8);
  CHECK(sorted_by_order(records));
  for (const auto& r : records) CHECK(r.wall_ms > 0);
}
