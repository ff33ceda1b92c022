#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orbitkit/multisym.hpp"

namespace orbitkit {

struct TranscendenceReport {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t num_invariants = 0;
  std::size_t ambient_dim = 0;  // n * d
  std::size_t jacobian_rank = 0;
  bool contains_basis = false;       // jacobian_rank == ambient_dim
  bool necessary_condition = false;  // num_invariants >= ambient_dim
  std::size_t points_sampled = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> sample_ranks;
};

struct JacobianOptions {
  std::size_t max_degree = 3;
  std::size_t samples = 3;
  /// Sample coordinates are integers in [-box, box].
  std::int64_t box = 20;
};

/// Exact rank of the Jacobian of all power sums of degree <= max_degree at
/// `samples` random integer points; the report carries the maximum. A full
/// rank at any point certifies that the set contains a transcendence basis.
TranscendenceReport jacobian_rank_at(std::size_t n, std::size_t d, std::uint64_t seed,
                                     const JacobianOptions& options = {});

/// (d^3 + 6 d^2 + 11 d) / 6 >= n d, i.e. there are at least as many
/// invariants of degree <= 3 as coordinates.
bool degree3_count_condition(std::size_t n, std::size_t d);

struct Table1Row {
  std::size_t n;
  std::size_t d;
  bool expected;  // published Yes/No
  TranscendenceReport report;
  bool matches() const noexcept { return report.contains_basis == expected; }
};

/// The eight (n, d) cases of the published symmetric-group table.
struct Table1Case {
  std::size_t n;
  std::size_t d;
  bool expected;
};
const std::vector<Table1Case>& table1_cases();

std::vector<Table1Row> reproduce_table1(std::uint64_t seed = 1, std::size_t samples = 3);

struct ConjectureCell {
  std::size_t n;
  std::size_t d;
  bool inequality_holds;
  bool contains_basis;
  bool agree() const noexcept { return inequality_holds == contains_basis; }
  TranscendenceReport report;
};

/// Every 2 <= n <= n_max, 1 <= d <= n - 1. Requires n_max <= 8.
std::vector<ConjectureCell> conjecture_scan(std::size_t n_max, std::uint64_t seed = 1, std::size_t samples = 3);

}  // namespace orbitkit
