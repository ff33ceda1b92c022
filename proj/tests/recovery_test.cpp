#include <algorithm>

#include "doctest.h"
#include "orbitkit/recovery.hpp"
#include "test_support.hpp"

using namespace orbitkit;
using orbitkit::testing::rationals;

namespace {

template <class S>
RecoveryInput<S> input_for(const Representation<S>& rep, std::span<const S> x) {
  return {rep, invariant_tensor<S>(rep, x, 2), invariant_tensor<S>(rep, x, 3)};
}

ErrorCode recovery_error(const RecoveryInput<Rational>& input, std::uint64_t seed, const RecoveryOptions& options = {}) {
  try {
    (void)recover_orbit(input, seed, options);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("recovery unexpectedly succeeded");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("recovery examples") {
  const auto z3 = from_descriptor<Rational>("regular:cyclic:3");
  const auto x = rationals({1, 2, 4});
  const auto result = recover_orbit(input_for<Rational>(z3, x), 1);
  auto got = result.recovered_orbit;
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<Vector<Rational>>{rationals({1, 2, 4}), rationals({2, 4, 1}), rationals({4, 1, 2})});

  CHECK(recovery_error(input_for<Rational>(z3, rationals({1, 1, 1})), 1) == ErrorCode::LinearlyDependentOrbit);

  const auto d3 = from_descriptor<Rational>("regular:dihedral:3");
  const auto y = rationals({1, 2, 4, 8, 16, 32});
  const auto r = recover_orbit(input_for<Rational>(d3, y), 1);
  CHECK(same_multiset<Rational>(r.recovered_orbit, orbit<Rational>(d3, y)));
}

TEST_CASE("random generic vectors") {
  const auto a = random_generic_vector<Rational>(6, 42, 50);
  CHECK(a == random_generic_vector<Rational>(6, 42, 50));
  CHECK(std::none_of(a.begin(), a.end(), [](const Rational& v) { return sgn(v) == 0; }));
  CHECK(std::all_of(a.begin(), a.end(), [](const Rational& v) { return abs(v) <= 50; }));
  int distinct = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    distinct += random_generic_vector<Rational>(3, 2 * s + 1, 10) != random_generic_vector<Rational>(3, 2 * s + 2, 10);
  }
  CHECK(distinct == 100);
  CHECK_THROWS_AS(random_generic_vector<Rational>(3, 1, 0), Error);
}

TEST_CASE("round trip on small regular representations, exact and f64") {
  for (const char* desc : {"regular:cyclic:4", "regular:cyclic:5", "regular:dihedral:3", "regular:dihedral:4",
                           "regular:symmetric:3"}) {
    const std::string name = desc;
    CAPTURE(name);
    const auto rep = from_descriptor<Rational>(desc);
    const auto rep_c = from_descriptor<Complex>(desc);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      CAPTURE(seed);
      const auto x = random_generic_vector<Rational>(rep.dim(), seed, 50);
      const auto input = input_for<Rational>(rep, x);
      const auto result = recover_orbit(input, seed);
      CHECK(same_multiset<Rational>(result.recovered_orbit, orbit<Rational>(rep, x)));
      CHECK(tensor_equal(power_sum_tensor<Rational>(result.recovered_orbit, rep.dim(), 2), input.t2));
      CHECK(tensor_equal(power_sum_tensor<Rational>(result.recovered_orbit, rep.dim(), 3), input.t3));
      CHECK(result.scale * result.scale * result.scale == result.scale_cubed);
      CHECK(result.basis_w.cols() == rep.group().order());

      const auto xc = random_generic_vector<Complex>(rep_c.dim(), seed, 50);
      const auto rc = recover_orbit(input_for<Complex>(rep_c, xc), seed);
      CHECK(same_multiset<Complex>(rc.recovered_orbit, orbit<Complex>(rep_c, xc), 1e-8));
    }
  }
}

TEST_CASE("recovered orbit is closed under the action") {
  const auto rep = from_descriptor<Rational>("regular:dihedral:4");
  const auto x = random_generic_vector<Rational>(rep.dim(), 3, 50);
  const auto result = recover_orbit(input_for<Rational>(rep, x), 3);
  for (ElementIndex h = 0; h < rep.group().order(); ++h) {
    std::vector<Vector<Rational>> moved;
    for (const auto& y : result.recovered_orbit) moved.push_back(rep.apply(h, y));
    CHECK(same_multiset<Rational>(moved, result.recovered_orbit));
  }
}

TEST_CASE("the choice of eigenvector does not change the orbit") {
  const auto rep = from_descriptor<Rational>("regular:dihedral:3");
  const auto x = random_generic_vector<Rational>(rep.dim(), 8, 50);
  const auto input = input_for<Rational>(rep, x);
  const auto reference = recover_orbit(input, 8).recovered_orbit;
  for (std::size_t choice = 1; choice < rep.group().order(); ++choice) {
    RecoveryOptions options;
    options.eigenvector_choice = choice;
    CHECK(same_multiset<Rational>(recover_orbit(input, 8, options).recovered_orbit, reference));
  }
}

TEST_CASE("recovery in a representation strictly larger than the orbit span") {
  const auto z3 = from_descriptor<Rational>("regular:cyclic:3");
  const auto doubled = direct_sum(z3, z3);
  const auto x = rationals({1, 2, 4, -3, 5, 7});
  const auto result = recover_orbit(input_for<Rational>(doubled, x), 2);
  CHECK(result.basis_w.rows() == 6);
  CHECK(result.basis_w.cols() == 3);
  CHECK(same_multiset<Rational>(result.recovered_orbit, orbit<Rational>(doubled, x)));
}

TEST_CASE("linearly dependent orbits are refused") {
  const auto std5 = from_descriptor<Rational>("dihedral-standard:5");
  const auto x = random_generic_vector<Rational>(5, 1, 50);
  CHECK(recovery_error(input_for<Rational>(std5, x), 1) == ErrorCode::LinearlyDependentOrbit);
  const auto cmf = from_descriptor<Rational>("dihedral-cmf:4");
  CHECK(recovery_error(input_for<Rational>(cmf, random_generic_vector<Rational>(6, 1, 50)), 1) ==
        ErrorCode::LinearlyDependentOrbit);
}

TEST_CASE("corrupting one entry of T3 is always detected") {
  const auto rep = from_descriptor<Rational>("regular:cyclic:4");
  SeededRng rng(77);
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const auto x = random_generic_vector<Rational>(rep.dim(), 100 + trial, 50);
    auto input = input_for<Rational>(rep, x);
    const auto indices = sorted_multi_indices(rep.dim(), 3);
    const auto& idx = indices[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(indices.size()) - 1))];
    input.t3.add(idx, Rational(1));
    const auto code = recovery_error(input, trial);
    CHECK((code == ErrorCode::VerificationFailed || code == ErrorCode::InconsistentScale));
  }
}

TEST_CASE("corruption is detected on the f64 path too") {
  const auto rep = from_descriptor<Complex>("regular:dihedral:3");
  for (std::uint64_t trial = 0; trial < 5; ++trial) {
    const auto x = random_generic_vector<Complex>(rep.dim(), 200 + trial, 50);
    auto input = input_for<Complex>(rep, x);
    input.t3.add({0, 1, static_cast<std::size_t>(trial)}, Complex(1.0, 0.0));
    try {
      (void)recover_orbit(input, trial);
      FAIL("corruption went unnoticed");
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::VerificationFailed || e.code() == ErrorCode::InconsistentScale));
    }
  }
}

TEST_CASE("input validation") {
  const auto rep = from_descriptor<Rational>("regular:cyclic:3");
  RecoveryInput<Rational> bad{rep, SymmetricTensor<Rational>(3, 2), SymmetricTensor<Rational>(4, 3)};
  CHECK(recovery_error(bad, 1) == ErrorCode::DimensionMismatch);
}
