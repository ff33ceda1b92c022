#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "orbitkit/scalar.hpp"

namespace orbitkit {

struct BenchRecord {
  std::string case_name;
  std::size_t group_order = 0;
  std::size_t dim = 0;
  double wall_ms = 0.0;
  ScalarKind scalar = ScalarKind::Exact;
};

enum class BenchSuite { Tensors, Rank, Recovery };

/// Throws ParseError for anything other than tensors, rank or recovery.
BenchSuite parse_bench_suite(std::string_view name);
std::string_view bench_suite_name(BenchSuite suite);

/// Median wall time over `reps` runs after one discarded warm-up run, on the
/// exact path, run sequentially. Records are sorted by group order.
///  tensors:  T_3 of regular representations of D_3, Z_8, D_6, S_4.
///  rank:     exact Jacobian rank for each row of the symmetric-group table.
///  recovery: full recovery for the regular representation of S_4.
std::vector<BenchRecord> run_bench(BenchSuite suite, std::size_t reps);

}  // namespace orbitkit
