#include "orbitkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace orbitkit {
namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Each row scaled by the lcm of its denominators.
IntMatrix clear_row_denominators(const Matrix<Rational>& a) {
  IntMatrix m(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  return m;
}

// Fraction-free row echelon form. Every intermediate entry is a minor of the
// input, so the division by the previous pivot is exact.
std::vector<std::size_t> bareiss_pivots(IntMatrix m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  mpz_class prev = 1;
  mpz_class t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class S>
double pivot_threshold(const Matrix<S>& a, double rel_tol) {
  if constexpr (ScalarTraits<S>::exact) {
    return 0.0;
  } else {
    return rel_tol * max_magnitude(a);
  }
}

// Index of the pivot row for column c among rows [from, rows): first nonzero
// entry on the exact path, largest magnitude on the F64 path.
template <class S>
std::size_t choose_pivot(const Matrix<S>& m, std::size_t from, std::size_t c, double threshold) {
  std::size_t best = m.rows();
  if constexpr (ScalarTraits<S>::exact) {
    for (std::size_t i = from; i < m.rows(); ++i) {
      if (sgn(m(i, c)) != 0) return i;
    }
    (void)threshold;
  } else {
    double best_mag = threshold;
    for (std::size_t i = from; i < m.rows(); ++i) {
      const double mag = std::abs(m(i, c));
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
  }
  return best;
}

template <class S>
void swap_rows(Matrix<S>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// Reduced row echelon form in place; returns pivot columns. Only the first
// `scan_cols` columns are eligible as pivots (the rest ride along, as in an
// augmented system).
template <class S>
std::vector<std::size_t> rref_in_place(Matrix<S>& m, std::size_t scan_cols, double threshold) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < scan_cols && r < m.rows(); ++c) {
    const std::size_t p = choose_pivot(m, r, c, threshold);
    if (p == m.rows()) {
      if constexpr (!ScalarTraits<S>::exact) {
        for (std::size_t i = r; i < m.rows(); ++i) m(i, c) = S(0);
      }
      continue;
    }
    swap_rows(m, p, r);
    const S inv_pivot = S(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv_pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const S f = m(i, c);
      if (ScalarTraits<S>::is_zero(f)) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

template <class S>
std::vector<std::size_t> pivot_columns(const Matrix<S>& a, double rel_tol) {
  if constexpr (ScalarTraits<S>::exact) {
    return bareiss_pivots(clear_row_denominators(a), a.cols());
  } else {
    Matrix<S> m = a;
    const double threshold = pivot_threshold(a, rel_tol);
    if (threshold == 0.0) return {};
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
      const std::size_t p = choose_pivot(m, r, c, threshold);
      if (p == m.rows()) continue;
      swap_rows(m, p, r);
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        const S f = m(i, c) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }
}

template <class S>
std::size_t rank(const Matrix<S>& a, double rel_tol) {
  return pivot_columns(a, rel_tol).size();
}

template <class S>
Matrix<S> column_space_basis(const Matrix<S>& a, double rel_tol) {
  const auto pivots = pivot_columns(a, rel_tol);
  Matrix<S> basis(a.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < a.rows(); ++i) basis(i, k) = a(i, pivots[k]);
  return basis;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& a, double rel_tol) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = S(1);
  }
  const auto pivots = rref_in_place(aug, n, pivot_threshold(a, rel_tol));
  if (pivots.size() != n) {
    throw Error(ErrorCode::SingularMatrix, "rank " + std::to_string(pivots.size()) + " < " + std::to_string(n));
  }
  Matrix<S> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class S>
Matrix<S> kernel_basis(const Matrix<S>& a, double rel_tol) {
  Matrix<S> m = a;
  const auto pivots = rref_in_place(m, m.cols(), pivot_threshold(a, rel_tol));
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Matrix<S> basis(a.cols(), a.cols() - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, free);
    ++k;
  }
  return basis;
}

namespace {

// Householder QR least squares for the F64 path: avoids squaring the
// condition number the way the normal equations do.
Matrix<Complex> householder_least_squares(const Matrix<Complex>& b, const Matrix<Complex>& y, double rel_tol) {
  const std::size_t m = b.rows(), k = b.cols();
  if (k > m) throw Error(ErrorCode::InconsistentSystem, "B does not have full column rank");
  Matrix<Complex> r = b;
  Matrix<Complex> qy = y;
  const double threshold = rel_tol * max_magnitude(b);
  for (std::size_t c = 0; c < k; ++c) {
    double norm2 = 0.0;
    for (std::size_t i = c; i < m; ++i) norm2 += std::norm(r(i, c));
    const double norm = std::sqrt(norm2);
    if (norm <= threshold || norm == 0.0) throw Error(ErrorCode::InconsistentSystem, "B does not have full column rank");
    const Complex head = r(c, c);
    const Complex phase = std::abs(head) > 0.0 ? head / std::abs(head) : Complex(1.0, 0.0);
    // v = x + phase * |x| e_1, reflector H = I - 2 v v^H / (v^H v)
    std::vector<Complex> v(m - c);
    for (std::size_t i = c; i < m; ++i) v[i - c] = r(i, c);
    v[0] += phase * norm;
    double vnorm2 = 0.0;
    for (const auto& e : v) vnorm2 += std::norm(e);
    const auto reflect = [&](Matrix<Complex>& target, std::size_t from_col) {
      for (std::size_t j = from_col; j < target.cols(); ++j) {
        Complex dot = 0.0;
        for (std::size_t i = c; i < m; ++i) dot += std::conj(v[i - c]) * target(i, j);
        const Complex f = 2.0 * dot / vnorm2;
        for (std::size_t i = c; i < m; ++i) target(i, j) -= f * v[i - c];
      }
    };
    reflect(r, c);
    reflect(qy, 0);
  }
  Matrix<Complex> coeffs(k, y.cols());
  for (std::size_t j = 0; j < y.cols(); ++j) {
    for (std::size_t i = k; i-- > 0;) {
      Complex acc = qy(i, j);
      for (std::size_t l = i + 1; l < k; ++l) acc -= r(i, l) * coeffs(l, j);
      coeffs(i, j) = acc / r(i, i);
    }
  }
  return coeffs;
}

}  // namespace

template <class S>
Matrix<S> solve_least_squares_exact(const Matrix<S>& b, const Matrix<S>& y, double residual_tol, double rel_tol) {
  if (b.rows() != y.rows()) throw Error(ErrorCode::DimensionMismatch, "least squares: B and Y row counts differ");
  Matrix<S> coeffs;
  if constexpr (ScalarTraits<S>::exact) {
    // normal equations B^H B C = B^H Y, exact over Q
    const Matrix<S> bh = adjoint(b);
    try {
      coeffs = inverse(bh * b, rel_tol) * (bh * y);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SingularMatrix) {
        throw Error(ErrorCode::InconsistentSystem, "B does not have full column rank");
      }
      throw;
    }
  } else {
    coeffs = householder_least_squares(b, y, rel_tol);
  }
  const Matrix<S> residual = b * coeffs - y;
  if constexpr (ScalarTraits<S>::exact) {
    for (const S& v : residual.data()) {
      if (sgn(v) != 0) throw Error(ErrorCode::InconsistentSystem, "Y is not in the column span of B");
    }
  } else {
    const double res = max_magnitude(residual);
    if (res > residual_tol * (1.0 + max_magnitude(y))) {
      throw Error(ErrorCode::InconsistentSystem, "residual " + std::to_string(res) + " exceeds tolerance");
    }
  }
  return coeffs;
}

std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // Similarity reduction to upper Hessenberg form by elimination below the
  // subdiagonal, then the three-term recurrence on leading principal minors.
  Matrix<Rational> h = m;
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t p = c + 1;
    while (p < n && sgn(h(p, c)) == 0) ++p;
    if (p == n) continue;
    if (p != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, c + 1));
    }
    for (std::size_t k = c + 2; k < n; ++k) {
      if (sgn(h(k, c)) == 0) continue;
      const Rational u = h(k, c) / h(c + 1, c);
      for (std::size_t j = c; j < n; ++j) h(k, j) -= u * h(c + 1, j);
      for (std::size_t i = 0; i < n; ++i) h(i, c + 1) += u * h(i, k);
    }
  }

  // polys[k] = characteristic polynomial of the leading k x k block, ascending
  std::vector<std::vector<Rational>> polys(n + 1);
  polys[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t col = k - 1;
    std::vector<Rational> next(k + 1, Rational(0));
    for (std::size_t e = 0; e < k; ++e) {
      next[e + 1] += polys[k - 1][e];
      next[e] -= h(col, col) * polys[k - 1][e];
    }
    Rational t = 1;
    for (std::size_t i = col; i-- > 0;) {
      t *= h(i + 1, i);
      if (sgn(t) == 0) break;
      const Rational f = h(i, col) * t;
      if (sgn(f) == 0) continue;
      for (std::size_t e = 0; e < polys[i].size(); ++e) next[e] -= f * polys[i][e];
    }
    polys[k] = std::move(next);
  }
  return polys[n];
}

std::vector<Rational> characteristic_polynomial_faddeev_leverrier(const Matrix<Rational>& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  // prod holds M * N_k, where N_k = M N_{k-1} + c_{n-k+1} I and N_0 = 0.
  Matrix<Rational> prod(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Rational> next = prod;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    prod = m * next;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

RationalSpectrum rational_spectrum(const Matrix<Rational>& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "eigenvalues of a non-square matrix");
  const std::size_t n = m.rows();
  RationalSpectrum spectrum;
  if (n == 0) return spectrum;
  const auto poly = characteristic_polynomial(m);
  mpz_class den = 1;
  for (const auto& c : poly) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) ints[i] = poly[i].get_num() * (den / poly[i].get_den());

  // Root hints are only consulted when the coefficients are too large for
  // divisor enumeration; they come from the floating-point eigenvalues of M.
  std::vector<double> hints;
  {
    Matrix<Complex> approx(n, n);
    bool finite = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        approx(i, j) = Complex(m(i, j).get_d(), 0.0);
        finite = finite && std::isfinite(approx(i, j).real());
      }
    }
    if (finite) {
      for (const auto& pair : complex_eigensystem(approx)) hints.push_back(pair.value.real());
    }
  }

  spectrum.roots = rational_roots(ints, hints);
  // Divide out every root with multiplicity; whatever degree is left
  // belongs to roots outside Q.
  std::vector<mpz_class> rest = ints;
  for (const auto& r : spectrum.roots) {
    while (rest.size() > 1) {
      // synthetic division by (q t - p), highest coefficient first
      const mpz_class p = r.get_num(), q = r.get_den();
      std::vector<mpz_class> quotient(rest.size() - 1);
      mpz_class carry = 0;
      bool exact = true;
      for (std::size_t k = rest.size() - 1; k-- > 0;) {
        const mpz_class top = rest[k + 1] + carry;
        if (top % q != 0) {
          exact = false;
          break;
        }
        quotient[k] = top / q;
        carry = quotient[k] * p;
      }
      if (!exact || rest[0] + carry != 0) break;
      rest = std::move(quotient);
      ++spectrum.multiplicity_found;
    }
  }
  spectrum.splits = spectrum.multiplicity_found == n;
  return spectrum;
}

std::vector<Rational> distinct_rational_eigenvalues(const Matrix<Rational>& m) {
  auto spectrum = rational_spectrum(m);
  if (spectrum.roots.size() != m.rows()) {
    throw Error(ErrorCode::EigenvaluesNotDistinct,
                "found " + std::to_string(spectrum.roots.size()) + " distinct rational roots of a degree-" +
                    std::to_string(m.rows()) + " characteristic polynomial" +
                    (spectrum.splits ? " (repeated roots)" : " (some roots are not rational)"));
  }
  return std::move(spectrum.roots);
}

template <class S>
Vector<S> eigenvector_for(const Matrix<S>& m, const S& lambda, double rel_tol) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "eigenvector of a non-square matrix");
  Matrix<S> shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
  const auto kernel = kernel_basis(shifted, rel_tol);
  if (kernel.cols() != 1) {
    throw Error(ErrorCode::NotDiagonalizable, "eigenspace has dimension " + std::to_string(kernel.cols()));
  }
  return kernel.column(0);
}

namespace {

std::vector<EigenPair<Rational>> eigen_exact(const Matrix<Rational>& m, const EigenOptions& options) {
  std::vector<EigenPair<Rational>> pairs;
  for (const auto& lambda : distinct_rational_eigenvalues(m)) {
    pairs.push_back({lambda, eigenvector_for(m, lambda, options.rank_tol)});
  }
  return pairs;
}

std::vector<EigenPair<Complex>> eigen_f64(const Matrix<Complex>& m, const EigenOptions& options) {
  auto pairs = complex_eigensystem(m);
  double scale = 0.0;
  for (const auto& p : pairs) scale = std::max(scale, std::abs(p.value));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (std::abs(pairs[i].value - pairs[j].value) <= options.sep_tol * scale) {
        throw Error(ErrorCode::EigenvaluesNotDistinct, "eigenvalues " + std::to_string(i) + " and " +
                                                           std::to_string(j) + " are within separation tolerance");
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return pairs;
}

}  // namespace

template <class S>
std::vector<EigenPair<S>> eigendecompose_distinct(const Matrix<S>& m, const EigenOptions& options) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "eigendecomposition of a non-square matrix");
  if constexpr (ScalarTraits<S>::exact) {
    return eigen_exact(m, options);
  } else {
    return eigen_f64(m, options);
  }
}

#define ORBITKIT_INSTANTIATE_LINALG(S)                                                                      \
  template std::vector<std::size_t> pivot_columns<S>(const Matrix<S>&, double);                            \
  template std::size_t rank<S>(const Matrix<S>&, double);                                                  \
  template Matrix<S> column_space_basis<S>(const Matrix<S>&, double);                                      \
  template Matrix<S> inverse<S>(const Matrix<S>&, double);                                                 \
  template Matrix<S> kernel_basis<S>(const Matrix<S>&, double);                                            \
  template Matrix<S> solve_least_squares_exact<S>(const Matrix<S>&, const Matrix<S>&, double, double);     \
  template std::vector<EigenPair<S>> eigendecompose_distinct<S>(const Matrix<S>&, const EigenOptions&);     \
  template Vector<S> eigenvector_for<S>(const Matrix<S>&, const S&, double);

ORBITKIT_INSTANTIATE_LINALG(Rational)
ORBITKIT_INSTANTIATE_LINALG(Complex)

#undef ORBITKIT_INSTANTIATE_LINALG

}  // namespace orbitkit
