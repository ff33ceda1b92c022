#include "orbitkit/transcendence.hpp"

#include <algorithm>

#include "orbitkit/linalg.hpp"
#include "orbitkit/parallel.hpp"
#include "orbitkit/random.hpp"

namespace orbitkit {

TranscendenceReport jacobian_rank_at(std::size_t n, std::size_t d, std::uint64_t seed, const JacobianOptions& options) {
  if (n < 1 || n > 8) throw Error(ErrorCode::OutOfRange, "jacobian_rank_at needs 1 <= n <= 8");
  if (options.samples < 1) throw Error(ErrorCode::OutOfRange, "at least one sample point is required");
  const auto invariants = enumerate_power_sums(n, d, options.max_degree);

  TranscendenceReport report;
  report.n = n;
  report.d = d;
  report.num_invariants = invariants.size();
  report.ambient_dim = n * d;
  report.necessary_condition = report.num_invariants >= report.ambient_dim;
  report.seed = seed;

  SeededRng rng(seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    Vector<Rational> point;
    point.reserve(n * d);
    for (std::size_t k = 0; k < n * d; ++k) point.emplace_back(rng.uniform_int(-options.box, options.box));
    Matrix<Rational> jac(invariants.size(), n * d);
    for (std::size_t r = 0; r < invariants.size(); ++r) {
      const auto g = gradient<Rational>(invariants[r], point);
      for (std::size_t c = 0; c < g.size(); ++c) jac(r, c) = g[c];
    }
    report.sample_ranks.push_back(rank(jac));
    ++report.points_sampled;
  }
  report.jacobian_rank = *std::max_element(report.sample_ranks.begin(), report.sample_ranks.end());
  report.contains_basis = report.jacobian_rank == report.ambient_dim;
  return report;
}

bool degree3_count_condition(std::size_t n, std::size_t d) {
  return d * d * d + 6 * d * d + 11 * d >= 6 * n * d;
}

const std::vector<Table1Case>& table1_cases() {
  static const std::vector<Table1Case> cases = {
      {4, 1, false}, {4, 2, true}, {5, 1, false}, {5, 2, false},
      {5, 3, true},  {6, 1, false}, {6, 2, false}, {6, 3, true},
  };
  return cases;
}

std::vector<Table1Row> reproduce_table1(std::uint64_t seed, std::size_t samples) {
  const auto& cases = table1_cases();
  JacobianOptions options;
  options.samples = samples;
  auto reports = parallel_map<TranscendenceReport>(
      cases.size(), [&](std::size_t i) { return jacobian_rank_at(cases[i].n, cases[i].d, seed, options); });
  std::vector<Table1Row> rows;
  for (std::size_t i = 0; i < cases.size(); ++i) rows.push_back({cases[i].n, cases[i].d, cases[i].expected, reports[i]});
  return rows;
}

std::vector<ConjectureCell> conjecture_scan(std::size_t n_max, std::uint64_t seed, std::size_t samples) {
  if (n_max > 8) throw Error(ErrorCode::OutOfRange, "conjecture_scan needs n_max <= 8");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t n = 2; n <= n_max; ++n)
    for (std::size_t d = 1; d + 1 <= n; ++d) cells.emplace_back(n, d);
  JacobianOptions options;
  options.samples = samples;
  auto reports = parallel_map<TranscendenceReport>(cells.size(), [&](std::size_t i) {
    return jacobian_rank_at(cells[i].first, cells[i].second, seed, options);
  });
  std::vector<ConjectureCell> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto [n, d] = cells[i];
    out.push_back({n, d, degree3_count_condition(n, d), reports[i].contains_basis, reports[i]});
  }
  return out;
}

}  // namespace orbitkit
