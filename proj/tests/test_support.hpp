#pragma once

#include <cstdint>

#include "orbitkit/matrix.hpp"
#include "orbitkit/random.hpp"

namespace orbitkit::testing {

template <class S>
Matrix<S> random_int_matrix(SeededRng& rng, std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi) {
  Matrix<S> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = ScalarTraits<S>::from_int(rng.uniform_int(lo, hi));
  return m;
}

template <class S>
Vector<S> random_int_vector(SeededRng& rng, std::size_t dim, std::int64_t lo, std::int64_t hi) {
  Vector<S> v(dim);
  for (auto& e : v) e = ScalarTraits<S>::from_int(rng.uniform_int(lo, hi));
  return v;
}

inline Vector<Rational> rationals(std::initializer_list<long> values) {
  Vector<Rational> v;
  for (long x : values) v.emplace_back(x);
  return v;
}

inline Vector<Complex> complexes(std::initializer_list<double> values) {
  Vector<Complex> v;
  for (double x : values) v.emplace_back(x, 0.0);
  return v;
}

}  // namespace orbitkit::testing
