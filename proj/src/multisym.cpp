#include "orbitkit/multisym.hpp"

#include <algorithm>

#include "orbitkit/tensors.hpp"

namespace orbitkit {

InvariantPolynomial::InvariantPolynomial(std::size_t n, std::size_t d, PowerSumLabel label)
    : n_(n), d_(d), label_(std::move(label)) {
  if (n_ < 1 || d_ < 1) throw Error(ErrorCode::OutOfRange, "power sums need n >= 1 and d >= 1");
  if (label_.columns.empty()) throw Error(ErrorCode::OutOfRange, "empty power-sum label");
  for (std::size_t c : label_.columns) {
    if (c < 1 || c > d_) {
      throw Error(ErrorCode::OutOfRange, "label entry " + std::to_string(c) + " outside 1.." + std::to_string(d_));
    }
  }
  std::sort(label_.columns.begin(), label_.columns.end());
}

std::map<Exponents, long> InvariantPolynomial::terms() const {
  std::map<Exponents, long> out;
  for (std::size_t i = 0; i < n_; ++i) {
    Exponents e(n_ * d_, 0);
    for (std::size_t c : label_.columns) ++e[i * d_ + (c - 1)];
    out[std::move(e)] += 1;
  }
  return out;
}

std::string InvariantPolynomial::name() const {
  std::string s = "p[";
  for (std::size_t k = 0; k < label_.columns.size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(label_.columns[k]);
  }
  return s + "]";
}

InvariantPolynomial power_sum(std::size_t n, std::size_t d, PowerSumLabel label) {
  return InvariantPolynomial(n, d, std::move(label));
}

std::vector<InvariantPolynomial> enumerate_power_sums(std::size_t n, std::size_t d, std::size_t max_degree) {
  if (max_degree < 1) throw Error(ErrorCode::OutOfRange, "max_degree must be >= 1");
  std::vector<InvariantPolynomial> out;
  for (std::size_t k = 1; k <= max_degree; ++k) {
    for (const auto& idx : sorted_multi_indices(d, k)) {
      PowerSumLabel label;
      for (std::size_t c : idx) label.columns.push_back(c + 1);
      out.emplace_back(n, d, std::move(label));
    }
  }
  return out;
}

std::size_t count_power_sums(std::size_t d, std::size_t max_degree) {
  std::size_t total = 0;
  for (std::size_t k = 1; k <= max_degree; ++k) {
    // C(d + k - 1, k), built incrementally to stay integral
    std::size_t c = 1;
    for (std::size_t t = 1; t <= k; ++t) c = c * (d + t - 1) / t;
    total += c;
  }
  return total;
}

template <class S>
S evaluate(const InvariantPolynomial& p, std::span<const S> point) {
  const std::size_t d = p.d();
  if (point.size() != p.n() * d) throw Error(ErrorCode::DimensionMismatch, "point must have n*d entries");
  S total(0);
  S term;
  for (std::size_t i = 0; i < p.n(); ++i) {
    term = S(1);
    for (std::size_t c : p.label().columns) term *= point[i * d + (c - 1)];
    total += term;
  }
  return total;
}

template <class S>
Vector<S> gradient(const InvariantPolynomial& p, std::span<const S> point) {
  const std::size_t d = p.d();
  if (point.size() != p.n() * d) throw Error(ErrorCode::DimensionMismatch, "point must have n*d entries");
  const auto& cols = p.label().columns;
  Vector<S> grad(point.size(), S(0));
  S term;
  for (std::size_t i = 0; i < p.n(); ++i) {
    // d/dx_{i,j} of prod_t x_{i,cols[t]}: for each occurrence t of column j,
    // the product with factor t removed
    for (std::size_t t = 0; t < cols.size(); ++t) {
      term = S(1);
      for (std::size_t s = 0; s < cols.size(); ++s)
        if (s != t) term *= point[i * d + (cols[s] - 1)];
      grad[i * d + (cols[t] - 1)] += term;
    }
  }
  return grad;
}

template Rational evaluate<Rational>(const InvariantPolynomial&, std::span<const Rational>);
template Complex evaluate<Complex>(const InvariantPolynomial&, std::span<const Complex>);
template Vector<Rational> gradient<Rational>(const InvariantPolynomial&, std::span<const Rational>);
template Vector<Complex> gradient<Complex>(const InvariantPolynomial&, std::span<const Complex>);

}  // namespace orbitkit
