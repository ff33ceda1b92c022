// Dense complex eigensolver: Householder reduction to upper Hessenberg form,
// Wilkinson-shifted QR sweeps with Givens rotations down to Schur form, and
// eigenvectors by back substitution on the triangular factor.

#include <algorithm>
#include <cmath>
#include <limits>

#include "orbitkit/linalg.hpp"

namespace orbitkit {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void reduce_to_hessenberg(Matrix<Complex>& h, Matrix<Complex>& z) {
  const std::size_t n = h.rows();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm2 += std::norm(h(i, k));
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) continue;
    const Complex x0 = h(k + 1, k);
    const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0, 0.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * norm;

    std::vector<Complex> v(n, Complex(0.0, 0.0));
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) continue;
    const double vnorm = std::sqrt(vnorm2);
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;

    // H <- P H P with P = I - 2 v v^H
    for (std::size_t j = 0; j < n; ++j) {
      Complex s(0.0, 0.0);
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, j);
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= 2.0 * v[i] * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex s(0.0, 0.0);
      for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j];
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= 2.0 * s * std::conj(v[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex s(0.0, 0.0);
      for (std::size_t j = k + 1; j < n; ++j) s += z(i, j) * v[j];
      for (std::size_t j = k + 1; j < n; ++j) z(i, j) -= 2.0 * s * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = Complex(0.0, 0.0);
  }
}

Complex wilkinson_shift(const Matrix<Complex>& h, std::size_t hi) {
  const Complex a = h(hi - 1, hi - 1);
  const Complex b = h(hi - 1, hi);
  const Complex c = h(hi, hi - 1);
  const Complex d = h(hi, hi);
  const Complex half = 0.5 * (a - d);
  const Complex disc = std::sqrt(half * half + b * c);
  const Complex mu1 = 0.5 * (a + d) + disc;
  const Complex mu2 = 0.5 * (a + d) - disc;
  return std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
}

void qr_sweep(Matrix<Complex>& h, Matrix<Complex>& z, std::size_t lo, std::size_t hi, Complex mu) {
  const std::size_t n = h.rows();
  std::vector<Complex> cs(hi - lo), ss(hi - lo);
  for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= mu;
  for (std::size_t k = lo; k < hi; ++k) {
    const Complex x = h(k, k);
    const Complex y = h(k + 1, k);
    const double r = std::hypot(std::abs(x), std::abs(y));
    Complex c(1.0, 0.0), s(0.0, 0.0);
    if (r != 0.0) {
      c = x / r;
      s = y / r;
    }
    cs[k - lo] = c;
    ss[k - lo] = s;
    for (std::size_t j = k; j < n; ++j) {
      const Complex t1 = h(k, j);
      const Complex t2 = h(k + 1, j);
      h(k, j) = std::conj(c) * t1 + std::conj(s) * t2;
      h(k + 1, j) = -s * t1 + c * t2;
    }
  }
  for (std::size_t k = lo; k < hi; ++k) {
    const Complex c = cs[k - lo];
    const Complex s = ss[k - lo];
    const std::size_t last = std::min(k + 2, hi);
    for (std::size_t i = 0; i <= last; ++i) {
      const Complex t1 = h(i, k);
      const Complex t2 = h(i, k + 1);
      h(i, k) = t1 * c + t2 * s;
      h(i, k + 1) = -t1 * std::conj(s) + t2 * std::conj(c);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Complex t1 = z(i, k);
      const Complex t2 = z(i, k + 1);
      z(i, k) = t1 * c + t2 * s;
      z(i, k + 1) = -t1 * std::conj(s) + t2 * std::conj(c);
    }
  }
  for (std::size_t i = lo; i <= hi; ++i) h(i, i) += mu;
}

}  // namespace

std::vector<EigenPair<Complex>> complex_eigensystem(const Matrix<Complex>& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "eigensystem of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  Matrix<Complex> h = m;
  Matrix<Complex> z = Matrix<Complex>::identity(n);
  reduce_to_hessenberg(h, z);

  const double norm = std::max(max_magnitude(h), std::numeric_limits<double>::min());
  std::size_t hi = n - 1;
  std::size_t iter = 0;
  const std::size_t max_iter = 60 * n;
  std::size_t total = 0;
  while (hi > 0) {
    std::size_t lo = hi;
    while (lo > 0) {
      const double scale = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (std::abs(h(lo, lo - 1)) <= kEps * (scale == 0.0 ? norm : scale)) {
        h(lo, lo - 1) = Complex(0.0, 0.0);
        break;
      }
      --lo;
    }
    if (lo == hi) {
      --hi;
      iter = 0;
      continue;
    }
    if (++total > max_iter) throw Error(ErrorCode::EigenvaluesNotDistinct, "QR iteration did not converge");
    ++iter;
    Complex mu = wilkinson_shift(h, hi);
    if (iter % 11 == 0) {
      // exceptional shift to break cycles
      mu = h(hi, hi) + Complex(0.75 * std::abs(h(hi, hi - 1)), 0.3 * std::abs(h(hi, hi - 1)));
    }
    qr_sweep(h, z, lo, hi, mu);
  }

  // Eigenvectors of the triangular Schur factor, mapped back through z.
  std::vector<EigenPair<Complex>> pairs;
  pairs.reserve(n);
  const double small = norm * kEps;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex lambda = h(k, k);
    std::vector<Complex> y(n, Complex(0.0, 0.0));
    y[k] = Complex(1.0, 0.0);
    for (std::size_t ii = k; ii-- > 0;) {
      Complex s(0.0, 0.0);
      for (std::size_t j = ii + 1; j <= k; ++j) s += h(ii, j) * y[j];
      Complex denom = h(ii, ii) - lambda;
      if (std::abs(denom) < small) denom = Complex(small, 0.0);
      y[ii] = -s / denom;
    }
    Vector<Complex> v(n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= k; ++j) v[i] += z(i, j) * y[j];
    double vn = 0.0;
    for (const auto& e : v) vn += std::norm(e);
    vn = std::sqrt(vn);
    if (vn > 0.0)
      for (auto& e : v) e /= vn;
    pairs.push_back({lambda, std::move(v)});
  }
  return pairs;
}

}  // namespace orbitkit
