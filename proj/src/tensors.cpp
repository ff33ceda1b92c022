#include "orbitkit/tensors.hpp"

#include <algorithm>
#include <cmath>

namespace orbitkit {

std::vector<MultiIndex> sorted_multi_indices(std::size_t dim, std::size_t degree) {
  std::vector<MultiIndex> out;
  if (degree == 0) {
    out.emplace_back();
    return out;
  }
  if (dim == 0) return out;
  MultiIndex idx(degree, 0);
  while (true) {
    out.push_back(idx);
    std::size_t pos = degree;
    while (pos > 0 && idx[pos - 1] == dim - 1) --pos;
    if (pos == 0) break;
    const std::size_t v = idx[pos - 1] + 1;
    for (std::size_t k = pos - 1; k < degree; ++k) idx[k] = v;
  }
  return out;
}

std::size_t orderings(std::span<const std::size_t> sorted) {
  std::size_t total = 1;
  std::size_t placed = 0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
    ++placed;
    // multiply by placed / run, keeping everything integral
    total = total * placed / run;
  }
  return total;
}

template <class S>
S SymmetricTensor<S>::at(std::span<const std::size_t> index) const {
  MultiIndex key(index.begin(), index.end());
  std::sort(key.begin(), key.end());
  const auto it = entries_.find(key);
  return it == entries_.end() ? S(0) : it->second;
}

template <class S>
void SymmetricTensor<S>::set(MultiIndex index, S value) {
  if (index.size() != degree_) throw Error(ErrorCode::DimensionMismatch, "multi-index length differs from degree");
  for (std::size_t i : index) {
    if (i >= dim_) throw Error(ErrorCode::DimensionMismatch, "multi-index out of range");
  }
  std::sort(index.begin(), index.end());
  if (ScalarTraits<S>::is_zero(value)) {
    entries_.erase(index);
  } else {
    entries_[std::move(index)] = std::move(value);
  }
}

template <class S>
void SymmetricTensor<S>::add(MultiIndex index, const S& value) {
  set(index, at(index) + value);
}

template <class S>
S SymmetricTensor<S>::monomial_coefficient(std::span<const std::size_t> index) const {
  MultiIndex key(index.begin(), index.end());
  std::sort(key.begin(), key.end());
  return at(key) * ScalarTraits<S>::from_int(static_cast<long>(orderings(key)));
}

Complex MomentTensor::at(std::span<const std::size_t> prefix, std::size_t last) const {
  MultiIndex key(prefix.begin(), prefix.end());
  std::sort(key.begin(), key.end());
  const auto it = entries_.find({key, last});
  return it == entries_.end() ? Complex(0.0, 0.0) : it->second;
}

template <class S>
SymmetricTensor<S> power_sum_tensor(std::span<const Vector<S>> vectors, std::size_t dim, std::size_t degree) {
  if (degree < 1) throw Error(ErrorCode::OutOfRange, "tensor degree must be >= 1");
  const auto indices = sorted_multi_indices(dim, degree);
  std::vector<S> sums(indices.size(), S(0));
  S term;
  for (const auto& y : vectors) {
    if (y.size() != dim) throw Error(ErrorCode::DimensionMismatch, "vector length differs from tensor dim");
    for (std::size_t k = 0; k < indices.size(); ++k) {
      term = y[indices[k][0]];
      for (std::size_t t = 1; t < degree; ++t) term *= y[indices[k][t]];
      sums[k] += term;
    }
  }
  SymmetricTensor<S> out(dim, degree);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (!ScalarTraits<S>::is_zero(sums[k])) out.set(indices[k], std::move(sums[k]));
  }
  return out;
}

template <class S>
SymmetricTensor<S> invariant_tensor(const Representation<S>& rep, std::span<const S> x, std::size_t degree) {
  const auto points = orbit(rep, x);
  return power_sum_tensor<S>(points, rep.dim(), degree);
}

MomentTensor moment_tensor(const Representation<Complex>& rep, std::span<const Complex> x, std::size_t degree) {
  if (degree < 1) throw Error(ErrorCode::OutOfRange, "moment degree must be >= 1");
  const std::size_t n = rep.dim();
  const auto points = orbit(rep, x);
  const auto prefixes = sorted_multi_indices(n, degree - 1);
  std::vector<Complex> sums(prefixes.size() * n, Complex(0.0, 0.0));
  for (const auto& y : points) {
    for (std::size_t p = 0; p < prefixes.size(); ++p) {
      Complex head(1.0, 0.0);
      for (std::size_t i : prefixes[p]) head *= y[i];
      for (std::size_t last = 0; last < n; ++last) sums[p * n + last] += head * std::conj(y[last]);
    }
  }
  MomentTensor out(n, degree);
  for (std::size_t p = 0; p < prefixes.size(); ++p) {
    for (std::size_t last = 0; last < n; ++last) {
      const Complex v = sums[p * n + last];
      if (v != Complex(0.0, 0.0)) out.add({prefixes[p], last}, v);
    }
  }
  return out;
}

template <class S>
Matrix<S> as_matrix(const SymmetricTensor<S>& t) {
  if (t.degree() != 2) throw Error(ErrorCode::DimensionMismatch, "as_matrix needs a degree-2 tensor");
  Matrix<S> m(t.dim(), t.dim());
  for (const auto& [idx, v] : t.entries()) {
    m(idx[0], idx[1]) = v;
    m(idx[1], idx[0]) = v;
  }
  return m;
}

template <class S>
SymmetricTensor<S> contract_once(const SymmetricTensor<S>& t, const Covector<S>& a) {
  if (t.degree() != 3) throw Error(ErrorCode::DimensionMismatch, "contract_once needs a degree-3 tensor");
  if (a.dim() != t.dim()) throw Error(ErrorCode::DimensionMismatch, "covector length differs from tensor dim");
  // Each stored (p <= q <= r) contributes a[i] * T once for every distinct
  // value i removed from the multiset.
  std::map<MultiIndex, S> acc;
  for (const auto& [idx, v] : t.entries()) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (k > 0 && idx[k] == idx[k - 1]) continue;
      MultiIndex rest;
      for (std::size_t m = 0; m < 3; ++m)
        if (m != k) rest.push_back(idx[m]);
      acc[rest] += a.entries[idx[k]] * v;
    }
  }
  SymmetricTensor<S> out(t.dim(), 2);
  for (auto& [idx, v] : acc) {
    if (!ScalarTraits<S>::is_zero(v)) out.set(idx, std::move(v));
  }
  return out;
}

template <class S>
bool tensor_equal(const SymmetricTensor<S>& a, const SymmetricTensor<S>& b, double tol) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) {
    throw Error(ErrorCode::DimensionMismatch, "tensor_equal on tensors of different shape");
  }
  if constexpr (ScalarTraits<S>::exact) {
    (void)tol;
    return a.entries() == b.entries();
  } else {
    double scale = 0.0;
    for (const auto& [idx, v] : a.entries()) scale = std::max(scale, std::abs(v));
    for (const auto& [idx, v] : b.entries()) scale = std::max(scale, std::abs(v));
    double diff = 0.0;
    for (const auto& [idx, v] : a.entries()) diff = std::max(diff, std::abs(v - b.at(idx)));
    for (const auto& [idx, v] : b.entries()) diff = std::max(diff, std::abs(v - a.at(idx)));
    return diff <= tol * (1.0 + scale);
  }
}

template <class S>
SymmetricTensor<S> scaled(const SymmetricTensor<S>& t, const S& factor) {
  SymmetricTensor<S> out(t.dim(), t.degree());
  for (const auto& [idx, v] : t.entries()) out.set(idx, v * factor);
  return out;
}

#define ORBITKIT_INSTANTIATE_TENSORS(S)                                                                       \
  template class SymmetricTensor<S>;                                                                          \
  template SymmetricTensor<S> power_sum_tensor<S>(std::span<const Vector<S>>, std::size_t, std::size_t);      \
  template SymmetricTensor<S> invariant_tensor<S>(const Representation<S>&, std::span<const S>, std::size_t); \
  template Matrix<S> as_matrix<S>(const SymmetricTensor<S>&);                                                 \
  template SymmetricTensor<S> contract_once<S>(const SymmetricTensor<S>&, const Covector<S>&);                \
  template bool tensor_equal<S>(const SymmetricTensor<S>&, const SymmetricTensor<S>&, double);                \
  template SymmetricTensor<S> scaled<S>(const SymmetricTensor<S>&, const S&);

ORBITKIT_INSTANTIATE_TENSORS(Rational)
ORBITKIT_INSTANTIATE_TENSORS(Complex)

#undef ORBITKIT_INSTANTIATE_TENSORS

}  // namespace orbitkit
