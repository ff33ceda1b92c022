#include <cmath>
#include <numbers>

#include "doctest.h"
#include "orbitkit/linalg.hpp"
#include "orbitkit/tensors.hpp"
#include "test_support.hpp"

using namespace orbitkit;
using orbitkit::testing::random_int_vector;
using orbitkit::testing::rationals;

namespace {

std::shared_ptr<const GroupTable> share(GroupTable g) { return std::make_shared<const GroupTable>(std::move(g)); }

std::vector<Representation<Rational>> exact_reps() {
  return {regular<Rational>(share(cyclic(4))), regular<Rational>(share(dihedral(3))),
          dihedral_standard<Rational>(5), dihedral_cmf<Rational>(4), symmetric_matrix_rep<Rational>(3, 2)};
}

Vector<Complex> dft_of_real(SeededRng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& e : v) e = static_cast<double>(rng.uniform_int(-20, 20)) / 4.0;
  Vector<Complex> x(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      x[k] += v[j] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(n));
    }
  }
  return x;
}

}  // namespace

TEST_CASE("multi-index helpers") {
  CHECK(sorted_multi_indices(3, 2).size() == 6);
  CHECK(sorted_multi_indices(26, 3).size() == 3276);
  CHECK(sorted_multi_indices(24, 3).size() == 2600);
  CHECK(sorted_multi_indices(2, 2) == std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(orderings(MultiIndex{0, 0, 0}) == 1);
  CHECK(orderings(MultiIndex{0, 0, 1}) == 3);
  CHECK(orderings(MultiIndex{0, 1, 2}) == 6);
}

TEST_CASE("symmetric tensor storage") {
  SymmetricTensor<Rational> t(3, 3);
  t.set({2, 0, 1}, 5);
  CHECK(t.at(MultiIndex{1, 2, 0}) == 5);
  CHECK(t.entries().count(MultiIndex{0, 1, 2}) == 1);
  CHECK(t.monomial_coefficient(MultiIndex{0, 1, 2}) == 30);
  t.add({0, 2, 1}, -5);
  CHECK(t.entries().empty());
  CHECK_THROWS_AS(t.set({0, 1}, 1), Error);
  CHECK_THROWS_AS(t.set({0, 1, 3}, 1), Error);
}

TEST_CASE("invariant tensor examples") {
  const auto trivial = regular<Rational>(share(cyclic(1)));
  const auto t1 = invariant_tensor<Rational>(trivial, rationals({7}), 1);
  CHECK(t1.at(MultiIndex{0}) == 7);

  const auto z2 = regular<Rational>(share(cyclic(2)));
  const auto t2 = invariant_tensor<Rational>(z2, rationals({1, 2}), 2);
  CHECK(as_matrix(t2) == Matrix<Rational>::from_ints({{5, 4}, {4, 5}}));
  CHECK(as_matrix(SymmetricTensor<Rational>(3, 2)) == Matrix<Rational>(3, 3));
  CHECK_THROWS_AS(as_matrix(SymmetricTensor<Rational>(3, 3)), Error);

  // cyclic(3) Fourier: T3 entries vanish unless i + j + k = 0 mod 3
  SeededRng rng(1);
  const auto f3 = cyclic_fourier(3);
  Vector<Complex> x = {{1.5, -2.0}, {0.25, 3.0}, {-1.0, 0.5}};
  const auto t3 = invariant_tensor<Complex>(f3, x, 3);
  for (const auto& [index, value] : t3.entries()) {
    if ((index[0] + index[1] + index[2]) % 3 != 0) CHECK(std::abs(value) <= 1e-10);
  }
  CHECK(std::abs(t3.at(MultiIndex{0, 1, 2}) - 3.0 * x[0] * x[1] * x[2]) <= 1e-12);
}

TEST_CASE("moment tensor examples") {
  SeededRng rng(6);
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto f = cyclic_fourier(n);
    Vector<Complex> x(n);
    for (auto& e : x) e = Complex(rng.uniform_int(-5, 5), rng.uniform_int(-5, 5));
    const auto m2 = moment_tensor(f, x, 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t prefix[] = {i};
        const Complex expected = i == k ? static_cast<double>(n) * std::norm(x[i]) : 0.0;
        CHECK(std::abs(m2.at(prefix, k) - expected) <= 1e-10);
      }
    }
  }
  const auto zero = moment_tensor(cyclic_fourier(3), Vector<Complex>(3), 3);
  for (const auto& [key, value] : zero.entries()) CHECK(std::abs(value) == 0.0);
  // d = 1 is the sum of conjugated orbit points, under the empty prefix
  const auto z2 = regular<Complex>(share(cyclic(2)));
  const auto m1 = moment_tensor(z2, Vector<Complex>{{1, 1}, {2, -1}}, 1);
  CHECK(std::abs(m1.at({}, 0) - Complex(3, 0)) <= 1e-15);
}

TEST_CASE("contraction") {
  const auto z2 = regular<Rational>(share(cyclic(2)));
  const auto x = rationals({1, 2});
  const auto t3 = invariant_tensor<Rational>(z2, x, 3);
  CHECK(as_matrix(contract_once(t3, Covector<Rational>{rationals({0, 0})})) == Matrix<Rational>(2, 2));
  CHECK(as_matrix(contract_once(t3, Covector<Rational>{rationals({1, 0})})) ==
        Matrix<Rational>::from_ints({{9, 6}, {6, 6}}));
  CHECK_THROWS_AS(contract_once(t3, Covector<Rational>{rationals({1})}), Error);

  // two-path oracle: contraction equals sum over g of <a, gx> (gx)(gx)^T
  SeededRng rng(9);
  for (const auto& rep : exact_reps()) {
    const auto y = random_int_vector<Rational>(rng, rep.dim(), -6, 6);
    const Covector<Rational> a{random_int_vector<Rational>(rng, rep.dim(), -6, 6)};
    Matrix<Rational> direct(rep.dim(), rep.dim());
    for (const auto& gy : orbit<Rational>(rep, y)) {
      Rational w = 0;
      for (std::size_t i = 0; i < rep.dim(); ++i) w += a.entries[i] * gy[i];
      for (std::size_t i = 0; i < rep.dim(); ++i)
        for (std::size_t j = 0; j < rep.dim(); ++j) direct(i, j) += w * gy[i] * gy[j];
    }
    CHECK(as_matrix(contract_once(invariant_tensor<Rational>(rep, y, 3), a)) == direct);
  }
}

TEST_CASE("tensor equality") {
  const auto z2 = regular<Rational>(share(cyclic(2)));
  const auto a = invariant_tensor<Rational>(z2, rationals({1, 2}), 2);
  const auto b = invariant_tensor<Rational>(z2, rationals({1, 3}), 2);
  CHECK(tensor_equal(a, a));
  CHECK_FALSE(tensor_equal(a, b));
  CHECK(as_matrix(b) == Matrix<Rational>::from_ints({{10, 6}, {6, 10}}));
  CHECK_THROWS_AS(tensor_equal(a, SymmetricTensor<Rational>(3, 2)), Error);

  SymmetricTensor<Complex> c(2, 2), d(2, 2);
  c.set({0, 0}, Complex(1.0, 0.0));
  d.set({0, 0}, Complex(1.0 + 1e-12, 0.0));
  CHECK(tensor_equal(c, d));
  d.set({0, 1}, Complex(1e-3, 0.0));
  CHECK_FALSE(tensor_equal(c, d));
}

TEST_CASE("invariance under the group action, exact") {
  SeededRng rng(12);
  for (const auto& rep : exact_reps()) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto x = random_int_vector<Rational>(rng, rep.dim(), -9, 9);
      for (std::size_t d = 1; d <= 3; ++d) {
        const auto base = invariant_tensor<Rational>(rep, x, d);
        for (ElementIndex h = 0; h < rep.group().order(); ++h) {
          CHECK(tensor_equal(invariant_tensor<Rational>(rep, rep.apply(h, x), d), base));
        }
      }
    }
  }
}

TEST_CASE("moment tensors are invariant") {
  SeededRng rng(13);
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto f = cyclic_fourier(n);
    Vector<Complex> x(n);
    for (auto& e : x) e = Complex(rng.uniform_int(-5, 5), rng.uniform_int(-5, 5));
    for (std::size_t d = 2; d <= 3; ++d) {
      const auto base = moment_tensor(f, x, d);
      for (ElementIndex h = 0; h < n; ++h) {
        const auto moved = moment_tensor(f, f.apply(h, x), d);
        for (const auto& [key, value] : base.entries()) CHECK(std::abs(moved.at(key.first, key.second) - value) <= 1e-10);
      }
    }
  }
}

TEST_CASE("homogeneity") {
  SeededRng rng(14);
  for (const auto& rep : exact_reps()) {
    const auto x = random_int_vector<Rational>(rng, rep.dim(), -9, 9);
    const Rational lambda = make_rational(-3, 2);
    Vector<Rational> scaled_x = x;
    for (auto& e : scaled_x) e *= lambda;
    Rational power = 1;
    for (std::size_t d = 1; d <= 3; ++d) {
      power *= lambda;
      CHECK(tensor_equal(invariant_tensor<Rational>(rep, scaled_x, d), scaled(invariant_tensor<Rational>(rep, x, d), power)));
    }
  }
}

TEST_CASE("rank of T2 equals the dimension of the orbit span") {
  SeededRng rng(15);
  for (const auto& rep : exact_reps()) {
    for (int trial = 0; trial < 3; ++trial) {
      auto x = random_int_vector<Rational>(rng, rep.dim(), -3, 3);
      if (trial == 2) std::fill(x.begin(), x.end(), Rational(1));
      const auto orb = orbit<Rational>(rep, x);
      CHECK(rank(as_matrix(invariant_tensor<Rational>(rep, x, 2))) == rank(Matrix<Rational>::from_columns(orb)));
    }
  }
}

TEST_CASE("bispectrum support and real-vector agreement") {
  SeededRng rng(16);
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto f = cyclic_fourier(n);
    Vector<Complex> x(n);
    for (auto& e : x) e = Complex(rng.uniform_int(-9, 9), rng.uniform_int(-9, 9));
    const auto t3 = invariant_tensor<Complex>(f, x, 3);
    for (const auto& [index, value] : t3.entries()) {
      if ((index[0] + index[1] + index[2]) % n != 0) CHECK(std::abs(value) <= 1e-10);
    }
    const auto m3 = moment_tensor(f, x, 3);
    for (const auto& [key, value] : m3.entries()) {
      if ((key.first[0] + key.first[1]) % n != key.second) CHECK(std::abs(value) <= 1e-10);
    }

    const auto xr = dft_of_real(rng, n);
    const auto tr = invariant_tensor<Complex>(f, xr, 3);
    const auto mr = moment_tensor(f, xr, 3);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t k = (i + j) % n;
        const std::size_t prefix[] = {i, j};
        const std::size_t index[] = {i, j, (n - k) % n};
        CHECK(std::abs(mr.at(prefix, k) - tr.at(index)) <= 1e-9 * (1.0 + std::abs(tr.at(index))));
      }
    }
  }
}
