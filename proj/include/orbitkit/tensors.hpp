#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "orbitkit/representation.hpp"

namespace orbitkit {

using MultiIndex = std::vector<std::size_t>;

/// All sorted multi-indices i_1 <= ... <= i_d over {0..dim-1}, in
/// lexicographic order. There are C(dim + d - 1, d) of them.
std::vector<MultiIndex> sorted_multi_indices(std::size_t dim, std::size_t degree);

/// Number of distinct orderings of a sorted multi-index (the multinomial
/// coefficient d! / prod(multiplicity!)).
std::size_t orderings(std::span<const std::size_t> sorted);

/// Symmetric tensor stored by sorted multi-index. The stored value is the
/// tensor entry (identical at every permutation of the index), not the
/// coefficient of the corresponding monomial.
template <class S>
class SymmetricTensor {
 public:
  SymmetricTensor(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }

  /// Entry at any (not necessarily sorted) index; zero when absent.
  S at(std::span<const std::size_t> index) const;
  void set(MultiIndex index, S value);
  void add(MultiIndex index, const S& value);

  const std::map<MultiIndex, S>& entries() const noexcept { return entries_; }

  /// Entry times the number of orderings of the index: the coefficient of
  /// x_{i_1} ... x_{i_d} when the tensor is read as a polynomial.
  S monomial_coefficient(std::span<const std::size_t> index) const;

 private:
  std::size_t dim_;
  std::size_t degree_;
  std::map<MultiIndex, S> entries_;
};

/// Unitary moment tensor: symmetric in the first degree-1 slots, with a
/// distinguished conjugated last slot. Keys are (sorted prefix, last index).
class MomentTensor {
 public:
  using Key = std::pair<MultiIndex, std::size_t>;

  MomentTensor(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }

  Complex at(std::span<const std::size_t> prefix, std::size_t last) const;
  void add(Key key, const Complex& value) { entries_[std::move(key)] += value; }
  const std::map<Key, Complex>& entries() const noexcept { return entries_; }

 private:
  std::size_t dim_;
  std::size_t degree_;
  std::map<Key, Complex> entries_;
};

template <class S>
struct Covector {
  Vector<S> entries;
  std::size_t dim() const noexcept { return entries.size(); }
};

/// sum over the list of y^{(x) d}, accumulated in list order.
template <class S>
SymmetricTensor<S> power_sum_tensor(std::span<const Vector<S>> vectors, std::size_t dim, std::size_t degree);

/// T_d(x) = sum over g of (g x)^{(x) d}; plain sum, no 1/|G| factor.
template <class S>
SymmetricTensor<S> invariant_tensor(const Representation<S>& rep, std::span<const S> x, std::size_t degree);

/// M_d(x) = sum over g of (g x)^{(x) d-1} (x) conj(g x). For d = 1 this is
/// sum over g of conj(g x), stored under the empty prefix.
MomentTensor moment_tensor(const Representation<Complex>& rep, std::span<const Complex> x, std::size_t degree);

/// Degree-2 tensor as a symmetric dim x dim matrix. Throws DimensionMismatch.
template <class S>
Matrix<S> as_matrix(const SymmetricTensor<S>& t);

/// (T_a)[j,k] = sum_i a[i] T[i,j,k] for a degree-3 tensor.
template <class S>
SymmetricTensor<S> contract_once(const SymmetricTensor<S>& t, const Covector<S>& a);

/// Exact equality on the exact path; on the F64 path
/// max |A - B| <= tol * (1 + max(|A|, |B|)). Throws DimensionMismatch on
/// shape mismatch.
template <class S>
bool tensor_equal(const SymmetricTensor<S>& a, const SymmetricTensor<S>& b, double tol = 1e-8);

template <class S>
SymmetricTensor<S> scaled(const SymmetricTensor<S>& t, const S& factor);

}  // namespace orbitkit
