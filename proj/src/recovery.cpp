#include "orbitkit/recovery.hpp"

#include <algorithm>
#include <cmath>

#include "orbitkit/random.hpp"

namespace orbitkit {
namespace {

template <class S>
Covector<S> random_covector(SeededRng& rng, std::size_t dim, std::int64_t range) {
  Covector<S> a;
  a.entries.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) a.entries.push_back(ScalarTraits<S>::from_int(rng.uniform_int(-range, range)));
  return a;
}

// Coordinates A with T = W A W^T, for W of full column rank.
template <class S>
Matrix<S> w_coordinates(const Matrix<S>& w, const Matrix<S>& t, const RecoveryOptions& options) {
  const Matrix<S> left = solve_least_squares_exact(w, t, options.tolerance, options.rank_tol);  // = A W^T
  return transpose(solve_least_squares_exact(w, transpose(left), options.tolerance, options.rank_tol));
}

// The ratio factor = s / t read off at the largest entry of t, then checked
// against every entry of both tensors.
template <class S>
S consistent_ratio(const SymmetricTensor<S>& s, const SymmetricTensor<S>& t, double tol, const char* what) {
  if (t.entries().empty()) throw Error(ErrorCode::InconsistentScale, std::string(what) + " tensor is zero");
  auto best = t.entries().begin();
  for (auto it = t.entries().begin(); it != t.entries().end(); ++it) {
    if (ScalarTraits<S>::magnitude_less(best->second, it->second)) best = it;
  }
  const S ratio = s.at(best->first) / best->second;
  if (!tensor_equal(s, scaled(t, ratio), tol)) {
    throw Error(ErrorCode::InconsistentScale, std::string(what) + " ratios disagree across entries");
  }
  return ratio;
}

}  // namespace

template <class S>
RecoveryResult<S> recover_orbit(const RecoveryInput<S>& input, std::uint64_t seed, const RecoveryOptions& options) {
  const Representation<S>& rep = input.rep;
  const std::size_t order = rep.group().order();
  const std::size_t dim = rep.dim();
  if (input.t2.dim() != dim || input.t3.dim() != dim || input.t2.degree() != 2 || input.t3.degree() != 3) {
    throw Error(ErrorCode::DimensionMismatch, "recovery needs degree-2 and degree-3 tensors on the representation space");
  }

  RecoveryResult<S> result;
  result.basis_w = column_space_basis(as_matrix(input.t2), options.rank_tol);
  if (result.basis_w.cols() < order) {
    throw Error(ErrorCode::LinearlyDependentOrbit, "rank of T2 is " + std::to_string(result.basis_w.cols()) +
                                                       ", the group has order " + std::to_string(order));
  }
  if (result.basis_w.cols() > order) {
    throw Error(ErrorCode::VerificationFailed, "rank of T2 exceeds the group order; not an invariant tensor");
  }
  const Matrix<S>& w = result.basis_w;

  SeededRng rng(seed);
  Vector<S> v;
  // Genuine input always gives a rational spectrum; count the draws that
  // did not, to tell bad covectors apart from inconsistent tensors.
  std::size_t irrational_spectra = 0;
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt > options.max_retries) {
      if (irrational_spectra == attempt) {
        throw Error(ErrorCode::VerificationFailed,
                    "every contraction ratio had irrational eigenvalues; T2 and T3 are not invariant tensors of one vector");
      }
      throw Error(ErrorCode::DegenerateContraction,
                  "no covector pair gave distinct eigenvalues in " + std::to_string(options.max_retries) + " retries");
    }
    result.retries_used = attempt;
    const auto a = random_covector<S>(rng, dim, options.covector_range);
    const auto b = random_covector<S>(rng, dim, options.covector_range);
    Matrix<S> coords_a, coords_b;
    try {
      coords_a = w_coordinates(w, as_matrix(contract_once(input.t3, a)), options);
      coords_b = w_coordinates(w, as_matrix(contract_once(input.t3, b)), options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InconsistentSystem) throw;
      throw Error(ErrorCode::VerificationFailed, "contraction of T3 leaves the span of T2");
    }
    try {
      const Matrix<S> m = coords_a * inverse(coords_b, options.rank_tol);
      // only one eigenvector is needed; distinct eigenvalues make each
      // eigenspace a line
      if constexpr (ScalarTraits<S>::exact) {
        const auto spectrum = rational_spectrum(m);
        if (spectrum.roots.size() != m.rows()) {
          if (!spectrum.splits) ++irrational_spectra;
          continue;
        }
        v = eigenvector_for(m, spectrum.roots[options.eigenvector_choice % m.rows()], options.rank_tol);
      } else {
        const auto eigen = eigendecompose_distinct(m, EigenOptions{options.sep_tol, options.rank_tol});
        v = eigen[options.eigenvector_choice % eigen.size()].vector;
      }
      break;
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::SingularMatrix:
        case ErrorCode::EigenvaluesNotDistinct:
        case ErrorCode::NotDiagonalizable:
          continue;
        default:
          throw;
      }
    }
  }

  const Vector<S> u = matvec(w, std::span<const S>(v));
  const auto u_orbit = orbit(rep, std::span<const S>(u));

  result.scale_cubed = consistent_ratio(power_sum_tensor<S>(u_orbit, dim, 3), input.t3, options.tolerance, "degree-3");
  const S scale_squared = consistent_ratio(power_sum_tensor<S>(u_orbit, dim, 2), input.t2, options.tolerance, "degree-2");
  if (ScalarTraits<S>::is_zero(scale_squared) || ScalarTraits<S>::is_zero(result.scale_cubed)) {
    throw Error(ErrorCode::InconsistentScale, "eigenvector has zero scale");
  }
  result.scale = result.scale_cubed / scale_squared;

  const S inv_scale = S(1) / result.scale;
  result.recovered_orbit.reserve(order);
  for (auto y : u_orbit) {
    for (auto& e : y) e *= inv_scale;
    result.recovered_orbit.push_back(std::move(y));
  }
  const auto check2 = power_sum_tensor<S>(result.recovered_orbit, dim, 2);
  const auto check3 = power_sum_tensor<S>(result.recovered_orbit, dim, 3);
  if (!tensor_equal(check2, input.t2, options.tolerance) || !tensor_equal(check3, input.t3, options.tolerance)) {
    throw Error(ErrorCode::VerificationFailed, "recovered orbit does not reproduce the input tensors");
  }
  return result;
}

template <class S>
Vector<S> random_generic_vector(std::size_t dim, std::uint64_t seed, std::int64_t range) {
  if (range < 1) throw Error(ErrorCode::OutOfRange, "range must be >= 1");
  SeededRng rng(seed);
  Vector<S> x;
  x.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) x.push_back(ScalarTraits<S>::from_int(rng.nonzero_int(range)));
  return x;
}

template <class S>
bool same_multiset(std::span<const Vector<S>> a, std::span<const Vector<S>> b, double tol) {
  if (a.size() != b.size()) return false;
  if constexpr (ScalarTraits<S>::exact) {
    (void)tol;
    std::vector<Vector<S>> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  } else {
    std::vector<bool> used(b.size(), false);
    for (const auto& va : a) {
      bool found = false;
      for (std::size_t j = 0; j < b.size() && !found; ++j) {
        if (used[j] || b[j].size() != va.size()) continue;
        const double scale = std::max(max_magnitude(std::span<const S>(b[j])), 1e-300);
        bool close = true;
        for (std::size_t k = 0; k < va.size() && close; ++k) close = std::abs(va[k] - b[j][k]) <= tol * scale;
        if (close) used[j] = found = true;
      }
      if (!found) return false;
    }
    return true;
  }
}

#define ORBITKIT_INSTANTIATE_RECOVERY(S)                                                                    \
  template RecoveryResult<S> recover_orbit<S>(const RecoveryInput<S>&, std::uint64_t, const RecoveryOptions&); \
  template Vector<S> random_generic_vector<S>(std::size_t, std::uint64_t, std::int64_t);                    \
  template bool same_multiset<S>(std::span<const Vector<S>>, std::span<const Vector<S>>, double);

ORBITKIT_INSTANTIATE_RECOVERY(Rational)
ORBITKIT_INSTANTIATE_RECOVERY(Complex)

#undef ORBITKIT_INSTANTIATE_RECOVERY

}  // namespace orbitkit
