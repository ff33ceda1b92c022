#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "orbitkit/matrix.hpp"

namespace orbitkit {

/// Sorted multiset of 1-based column indices; its length is the degree.
struct PowerSumLabel {
  std::vector<std::size_t> columns;

  std::size_t degree() const noexcept { return columns.size(); }
  auto operator<=>(const PowerSumLabel&) const = default;
};

/// Exponent vector over the n*d variables x_{i,j}, row-major.
using Exponents = std::vector<unsigned>;

/// The multisymmetric power sum  sum_{i=1..n} prod_t x_{i, label_t}  of S_n
/// acting on n x d matrices. Kept in structured form; the explicit term map
/// is built only on request.
class InvariantPolynomial {
 public:
  InvariantPolynomial(std::size_t n, std::size_t d, PowerSumLabel label);

  std::size_t n() const noexcept { return n_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t degree() const noexcept { return label_.degree(); }
  const PowerSumLabel& label() const noexcept { return label_; }

  /// Monomial -> coefficient. Every power sum has n monomials with
  /// coefficient 1, one per row.
  std::map<Exponents, long> terms() const;

  /// e.g. "p[1,2]".
  std::string name() const;

 private:
  std::size_t n_;
  std::size_t d_;
  PowerSumLabel label_;
};

/// Throws OutOfRange when a label entry is outside 1..d or the label is empty.
InvariantPolynomial power_sum(std::size_t n, std::size_t d, PowerSumLabel label);

/// All power sums of degree 1..max_degree ordered by (degree, label).
std::vector<InvariantPolynomial> enumerate_power_sums(std::size_t n, std::size_t d, std::size_t max_degree);

/// sum_{k=1..max_degree} C(d + k - 1, k).
std::size_t count_power_sums(std::size_t d, std::size_t max_degree);

/// Point is the n x d matrix flattened row-major. Throws DimensionMismatch.
template <class S>
S evaluate(const InvariantPolynomial& p, std::span<const S> point);

/// Partial derivatives d p / d x_{i,j} at the point, row-major.
template <class S>
Vector<S> gradient(const InvariantPolynomial& p, std::span<const S> point);

}  // namespace orbitkit
