#pragma once

#include <cstdint>
#include <random>

namespace orbitkit {

/// mt19937_64 with a portable bounded-integer draw (std distributions are
/// implementation-defined, which would make seeded output differ between
/// standard libraries).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi], lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  /// Uniform integer in [-range, range] excluding zero. range >= 1.
  std::int64_t nonzero_int(std::int64_t range) {
    const std::int64_t v = uniform_int(1, range);
    return uniform_int(0, 1) == 0 ? v : -v;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace orbitkit
