#pragma once

#include <cstddef>
#include <vector>

#include "orbitkit/matrix.hpp"

namespace orbitkit {

/// On the F64 path a pivot is treated as zero when
/// |p| < rel_tol * (largest entry magnitude of the input). Exact scalars
/// ignore the tolerance.
inline constexpr double kDefaultRankTol = 1e-10;

/// Default tolerance for eigenvalue separation on the F64 path:
/// |l_i - l_j| must exceed sep_tol * max|l|.
inline constexpr double kDefaultEigenSepTol = 1e-8;

/// Default residual tolerance (relative) for least squares on the F64 path.
inline constexpr double kDefaultResidualTol = 1e-8;

/// Indices of the pivot columns found by row reduction, ascending.
/// Exact scalars use fraction-free (Bareiss) elimination over integers.
template <class S>
std::vector<std::size_t> pivot_columns(const Matrix<S>& a, double rel_tol = kDefaultRankTol);

template <class S>
std::size_t rank(const Matrix<S>& a, double rel_tol = kDefaultRankTol);

/// Columns of `a` at its pivot positions, i.e. a basis of the column space.
template <class S>
Matrix<S> column_space_basis(const Matrix<S>& a, double rel_tol = kDefaultRankTol);

/// Throws Error(SingularMatrix).
template <class S>
Matrix<S> inverse(const Matrix<S>& a, double rel_tol = kDefaultRankTol);

/// Basis of {v : a v = 0}, one column per free variable of the reduced
/// row echelon form (free entry set to 1).
template <class S>
Matrix<S> kernel_basis(const Matrix<S>& a, double rel_tol = kDefaultRankTol);

/// Solves B C = Y for B of full column rank, then checks the residual. The
/// exact path uses the normal equations B^H B C = B^H Y; the F64 path uses
/// Householder QR. Throws InconsistentSystem when Y is not in span(B)
/// (nonzero residual, or relative residual > residual_tol).
template <class S>
Matrix<S> solve_least_squares_exact(const Matrix<S>& b, const Matrix<S>& y, double residual_tol = kDefaultResidualTol,
                                    double rel_tol = kDefaultRankTol);

/// Characteristic polynomial det(tI - M): Hessenberg reduction followed by
/// the minor recurrence, O(n^3) exact operations. Returns coefficients
/// c_0..c_n (ascending powers, c_n = 1).
std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& m);

/// Same polynomial by the Faddeev-LeVerrier trace recurrence, O(n^4).
/// Kept as an independent cross-check.
std::vector<Rational> characteristic_polynomial_faddeev_leverrier(const Matrix<Rational>& m);

template <class S>
struct EigenPair {
  S value;
  Vector<S> vector;
};

struct EigenOptions {
  double sep_tol = kDefaultEigenSepTol;
  double rank_tol = kDefaultRankTol;
};

/// All eigenpairs of a diagonalizable matrix with pairwise distinct
/// eigenvalues, sorted by eigenvalue (real part, then imaginary part).
///
/// Exact path: roots of the characteristic polynomial are searched among the
/// rational-root-theorem candidates, and each eigenvector spans the exact
/// kernel of M - lambda I. All eigenvalues must be rational.
/// F64 path: Hessenberg reduction followed by shifted complex QR.
///
/// Throws EigenvaluesNotDistinct or NotDiagonalizable.
template <class S>
std::vector<EigenPair<S>> eigendecompose_distinct(const Matrix<S>& m, const EigenOptions& options = {});

struct RationalSpectrum {
  std::vector<Rational> roots;         // distinct rational eigenvalues, ascending
  std::size_t multiplicity_found = 0;  // their algebraic multiplicities, summed
  bool splits = false;                 // every eigenvalue is rational
};

/// Rational eigenvalues of M with multiplicities. Never throws on spectral
/// grounds; distinct_rational_eigenvalues is the checked form.
RationalSpectrum rational_spectrum(const Matrix<Rational>& m);

/// The n pairwise distinct rational eigenvalues of M, ascending. Throws
/// EigenvaluesNotDistinct when the characteristic polynomial has fewer than
/// n distinct rational roots.
std::vector<Rational> distinct_rational_eigenvalues(const Matrix<Rational>& m);

/// Spanning vector of ker(M - lambda I). Throws NotDiagonalizable unless the
/// kernel is one-dimensional.
template <class S>
Vector<S> eigenvector_for(const Matrix<S>& m, const S& lambda, double rel_tol = kDefaultRankTol);

/// Eigenvalues/eigenvectors of a general complex matrix with no distinctness
/// requirement (Schur form + back substitution). Eigenvectors have unit
/// 2-norm. Used by the F64 path and to seed root isolation on the exact path.
std::vector<EigenPair<Complex>> complex_eigensystem(const Matrix<Complex>& m);

/// Rational roots of an integer-coefficient polynomial (ascending
/// coefficients), each reported once. `hints` are approximate root
/// locations used when the coefficients are too large for divisor
/// enumeration; every reported root is verified exactly.
std::vector<Rational> rational_roots(const std::vector<mpz_class>& coeffs, const std::vector<double>& hints = {});

}  // namespace orbitkit
