#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "orbitkit/representation.hpp"
#include "test_support.hpp"

using namespace orbitkit;
using orbitkit::testing::rationals;

namespace {

template <class S>
void check_homomorphism(const Representation<S>& rep) {
  const auto& g = rep.group();
  CHECK(rep.matrix(0) == Matrix<S>::identity(rep.dim()));
  for (ElementIndex a = 0; a < g.order(); ++a) {
    for (ElementIndex b = 0; b < g.order(); ++b) {
      const auto lhs = rep.matrix(g.mul(a, b));
      const auto rhs = rep.matrix(a) * rep.matrix(b);
      if constexpr (ScalarTraits<S>::exact) {
        CHECK(lhs == rhs);
      } else {
        CHECK(max_magnitude(lhs - rhs) <= 1e-12);
      }
    }
  }
}

template <class S>
bool is_permutation_matrix(const Matrix<S>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == S(1)) {
        ++ones;
      } else if (!(m(i, j) == S(0))) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return true;
}

std::shared_ptr<const GroupTable> share(GroupTable g) { return std::make_shared<const GroupTable>(std::move(g)); }

}  // namespace

TEST_CASE("regular representation") {
  const auto trivial = regular<Rational>(share(cyclic(1)));
  CHECK(trivial.dim() == 1);
  CHECK(trivial.matrix(0) == Matrix<Rational>::identity(1));

  const auto z2 = regular<Rational>(share(cyclic(2)));
  CHECK(z2.matrix(1) == Matrix<Rational>::from_ints({{0, 1}, {1, 0}}));

  const auto z3 = regular<Rational>(share(cyclic(3)));
  CHECK(z3.matrix(1) == Matrix<Rational>::from_ints({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  CHECK(z3.apply(1, rationals({1, 2, 4})) == rationals({4, 1, 2}));

  for (auto group : {cyclic(5), dihedral(4), symmetric(3), symmetric(4)}) {
    const auto rep = regular<Rational>(share(group));
    CHECK(rep.dim() == rep.group().order());
    check_homomorphism(rep);
    for (ElementIndex g = 0; g < rep.group().order(); ++g) CHECK(is_permutation_matrix(rep.matrix(g)));
    // g . e_h = e_{gh}
    for (ElementIndex g = 0; g < rep.group().order(); ++g)
      for (ElementIndex h = 0; h < rep.group().order(); ++h) CHECK(rep.matrix(g)(rep.group().mul(g, h), h) == 1);
  }
}

TEST_CASE("cyclic Fourier representation") {
  const auto f2 = cyclic_fourier(2);
  CHECK(max_magnitude(f2.matrix(0) - Matrix<Complex>::identity(2)) == 0.0);
  CHECK(std::abs(f2.matrix(1)(1, 1) - Complex(-1.0, 0.0)) <= 1e-15);
  const auto f4 = cyclic_fourier(4);
  const std::vector<Complex> expected = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(f4.matrix(1)(k, k) - expected[k]) <= 1e-15);
  for (std::size_t n = 1; n <= 8; ++n) check_homomorphism(cyclic_fourier(n));
}

TEST_CASE("dihedral standard representation") {
  const auto d4 = dihedral_standard<Rational>(4);
  CHECK(d4.matrix(0) == Matrix<Rational>::identity(4));
  // s = index n fixes coordinate 0 and swaps 1 <-> 3
  CHECK(d4.apply(4, rationals({9, 1, 2, 3})) == rationals({9, 3, 2, 1}));
  const auto d3 = dihedral_standard<Rational>(3);
  const ElementIndex sr = d3.group().mul(3, 1);
  CHECK(element_order(d3.group(), sr) == 2);
  for (std::size_t n = 2; n <= 8; ++n) check_homomorphism(dihedral_standard<Rational>(n));
}

TEST_CASE("characters") {
  const auto s0 = character_S0<Rational>(5);
  CHECK(s0.matrix(1)(0, 0) == 1);
  CHECK(s0.matrix(5)(0, 0) == -1);
  CHECK(s0.matrix(s0.group().mul(5, 1))(0, 0) == -1);
  const auto sm1 = character_Sminus1<Rational>(4);
  CHECK(sm1.matrix(1)(0, 0) == -1);
  CHECK(sm1.matrix(4)(0, 0) == -1);
  check_homomorphism(s0);
  check_homomorphism(sm1);
  try {
    (void)character_Sminus1<Rational>(5);
    FAIL("expected ParityMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParityMismatch);
  }
}

TEST_CASE("direct sums") {
  const auto std4 = dihedral_standard<Rational>(4);
  const auto zero = zero_representation<Rational>(std4.group_ptr());
  const auto same = direct_sum(std4, zero);
  CHECK(same.dim() == 4);
  for (ElementIndex g = 0; g < 8; ++g) CHECK(same.matrix(g) == std4.matrix(g));

  const auto std3 = dihedral_standard<Rational>(3);
  const auto sum = direct_sum(std3, character_S0<Rational>(3));
  CHECK(sum.dim() == 4);
  check_homomorphism(sum);

  try {
    (void)direct_sum(std3, dihedral_standard<Rational>(4));
    FAIL("expected GroupMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GroupMismatch);
  }
}

TEST_CASE("complete multiplicity-free dihedral representation") {
  CHECK(dihedral_cmf<Rational>(3).dim() == 4);
  CHECK(dihedral_cmf<Rational>(4).dim() == 6);
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto rep = dihedral_cmf<Rational>(n);
    CHECK(rep.dim() == (n % 2 ? n + 1 : n + 2));
    CHECK(rep.matrix(0) == Matrix<Rational>::identity(rep.dim()));
    check_homomorphism(rep);
  }
  CHECK_THROWS_AS(dihedral_cmf<Rational>(2), Error);
}

TEST_CASE("symmetric group on n x d matrices") {
  const auto d1 = symmetric_matrix_rep<Rational>(3, 1);
  CHECK(d1.dim() == 3);
  for (ElementIndex g = 0; g < 6; ++g) CHECK(is_permutation_matrix(d1.matrix(g)));
  const auto m22 = symmetric_matrix_rep<Rational>(2, 2);
  CHECK(m22.apply(1, rationals({1, 2, 3, 4})) == rationals({3, 4, 1, 2}));
  check_homomorphism(symmetric_matrix_rep<Rational>(3, 2));
  CHECK(symmetric_matrix_rep<Rational>(8, 2).dim() == 16);
}

TEST_CASE("apply and orbit") {
  const auto z3 = regular<Rational>(share(cyclic(3)));
  const auto x = rationals({1, 2, 4});
  CHECK(z3.apply(0, x) == x);
  CHECK_THROWS_AS(z3.apply(0, rationals({1, 2})), Error);

  const auto fixed = orbit<Rational>(z3, rationals({1, 1, 1}));
  CHECK(fixed.size() == 3);
  CHECK(std::all_of(fixed.begin(), fixed.end(), [](const auto& v) { return v == rationals({1, 1, 1}); }));

  auto orb = orbit<Rational>(z3, x);
  std::sort(orb.begin(), orb.end());
  CHECK(orb == std::vector<Vector<Rational>>{rationals({1, 2, 4}), rationals({2, 4, 1}), rationals({4, 1, 2})});

  // the orbit of h x is a permutation of the orbit of x
  const auto d4 = regular<Rational>(share(dihedral(4)));
  SeededRng rng(4);
  const auto y = orbitkit::testing::random_int_vector<Rational>(rng, 8, -9, 9);
  auto base = orbit<Rational>(d4, y);
  std::sort(base.begin(), base.end());
  for (ElementIndex h = 0; h < 8; ++h) {
    auto moved = orbit<Rational>(d4, d4.apply(h, y));
    CHECK(moved.size() == 8);
    std::sort(moved.begin(), moved.end());
    CHECK(moved == base);
  }
}

TEST_CASE("descriptors") {
  CHECK(from_descriptor<Rational>("regular:cyclic:5").dim() == 5);
  CHECK(from_descriptor<Rational>("regular:dihedral:4").dim() == 8);
  CHECK(from_descriptor<Rational>("regular:symmetric:4").dim() == 24);
  CHECK(from_descriptor<Complex>("fourier:5").dim() == 5);
  CHECK(from_descriptor<Rational>("dihedral-standard:6").dim() == 6);
  CHECK(from_descriptor<Rational>("dihedral-cmf:5").dim() == 6);
  CHECK(from_descriptor<Rational>("snmatrix:5:3").dim() == 15);
  const auto code_of = [](std::string_view d) {
    try {
      (void)from_descriptor<Rational>(d);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::OutOfRange;
  };
  CHECK(code_of("fourier:5") == ErrorCode::ScalarKindMismatch);
  CHECK(code_of("regular:cyclic") == ErrorCode::ParseError);
  CHECK(code_of("regular:cyclic:x") == ErrorCode::ParseError);
  CHECK(code_of("torus:3") == ErrorCode::ParseError);
}

TEST_CASE("dense representations are checked for the homomorphism property") {
  auto group = share(cyclic(2));
  std::vector<Matrix<Rational>> good = {Matrix<Rational>::identity(2), Matrix<Rational>::from_ints({{0, 1}, {1, 0}})};
  CHECK_NOTHROW(Representation<Rational>(group, good, "swap"));
  std::vector<Matrix<Rational>> bad = {Matrix<Rational>::identity(2), Matrix<Rational>::from_ints({{0, 2}, {1, 0}})};
  try {
    Representation<Rational>(group, bad, "bad");
    FAIL("expected NotAHomomorphism");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAHomomorphism);
  }
}
