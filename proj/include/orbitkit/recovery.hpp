#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orbitkit/linalg.hpp"
#include "orbitkit/tensors.hpp"

namespace orbitkit {

template <class S>
struct RecoveryInput {
  Representation<S> rep;
  SymmetricTensor<S> t2;
  SymmetricTensor<S> t3;
};

template <class S>
struct RecoveryResult {
  std::vector<Vector<S>> recovered_orbit;  // one vector per group element
  Matrix<S> basis_w;                       // columns span the orbit's linear span
  S scale_cubed;
  S scale;
  std::size_t retries_used = 0;
};

struct RecoveryOptions {
  /// Covector entries are drawn uniformly from [-covector_range, covector_range].
  std::int64_t covector_range = 1000;
  std::size_t max_retries = 10;
  /// Which eigenvector seeds the orbit (any choice gives the same orbit).
  std::size_t eigenvector_choice = 0;
  /// F64 path: tolerance for scale consistency and the final tensor check.
  double tolerance = 1e-8;
  double rank_tol = kDefaultRankTol;
  double sep_tol = kDefaultEigenSepTol;
};

/// Reconstructs the orbit {g x} from T_2(x) and T_3(x) alone, for any x whose
/// orbit is linearly independent.
///
///  1. W := column space of T_2 (must have |G| columns).
///  2. Random covectors a, b; T_a, T_b := single contractions of T_3.
///  3. A_a, A_b := T_a, T_b in W-coordinates (T = W A W^T).
///  4. Eigenvectors of A_a A_b^{-1} are the W-coordinates of c * g x.
///  5. u := W v for one eigenvector v.
///  6. c^3 and c^2 from sum (g u)^3 vs T_3 and sum (g u)^2 vs T_2.
///  7. Orbit := { g u / c }, re-verified against both tensors.
///
/// Throws LinearlyDependentOrbit, DegenerateContraction (no usable covector
/// pair within max_retries), InconsistentScale or VerificationFailed.
template <class S>
RecoveryResult<S> recover_orbit(const RecoveryInput<S>& input, std::uint64_t seed, const RecoveryOptions& options = {});

/// Entries uniform in [-range, range] \ {0}, deterministic in seed.
template <class S>
Vector<S> random_generic_vector(std::size_t dim, std::uint64_t seed, std::int64_t range);

/// Multiset equality of two vector lists. Exact on the exact path; on the F64
/// path each matched entry must agree to tol relative to the vector's
/// largest entry.
template <class S>
bool same_multiset(std::span<const Vector<S>> a, std::span<const Vector<S>> b, double tol = 1e-8);

}  // namespace orbitkit
