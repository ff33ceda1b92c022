#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "orbitkit/representation.hpp"

namespace orbitkit {

struct SeparationVerdict {
  std::size_t invariants_agree_to_degree = 0;
  bool same_orbit = false;
  std::optional<ElementIndex> witness_group_element;
};

/// Some g with g . x = y (exactly, or entrywise within tol on the F64 path),
/// found by brute force over the group.
template <class S>
std::optional<ElementIndex> same_orbit(const Representation<S>& rep, std::span<const S> x, std::span<const S> y,
                                       double tol = 1e-8);

/// Largest D <= max_degree such that T_d(x) = T_d(y) for every d <= D,
/// together with the brute-force orbit verdict.
template <class S>
SeparationVerdict compare_invariants(const Representation<S>& rep, std::span<const S> x, std::span<const S> y,
                                     std::size_t max_degree, double tol = 1e-8);

/// The pair (x, s_0[, s_-1]) and (x, -s_0[, -s_-1]) in the complete
/// multiplicity-free representation of D_n. For odd n `s_minus1` is ignored.
std::pair<Vector<Rational>, Vector<Rational>> cmf_flip_pair(std::size_t n, std::span<const Rational> standard_part,
                                                            const Rational& s0, const Rational& s_minus1);

struct CmfCounterexample {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  Vector<Rational> x;
  Vector<Rational> y;
  SeparationVerdict verdict;
  std::size_t resamples = 0;
  /// Agreement through degree 3 in distinct orbits: a genuine witness.
  bool holds() const noexcept { return verdict.invariants_agree_to_degree >= 3 && !verdict.same_orbit; }
};

/// Samples a generic standard part (distinct integers in [-10, 10]) and
/// nonzero sign-character coordinates, then compares the flipped pair up to
/// degree 3 exactly. Resamples when the pair happens to share an orbit and
/// throws DegenerateSample if that keeps happening.
///
/// For even n the pair is separated in degree 3: when l + l' = n/2 the
/// product of the V_l and V_l' coordinates contains S_-1, so s_-1 times that
/// quadratic is a cubic invariant that changes sign under the flip. The
/// verdict reports this instead of throwing; see holds().
CmfCounterexample dihedral_cmf_counterexample(std::size_t n, std::uint64_t seed);

}  // namespace orbitkit
