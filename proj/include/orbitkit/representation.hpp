#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbitkit/groups.hpp"
#include "orbitkit/matrix.hpp"

namespace orbitkit {

/// A matrix with exactly one nonzero entry per column: column i has value
/// coef[i] in row target[i]. Every representation the library constructs is
/// of this shape (permutation matrices, signed characters, the diagonal
/// Fourier action), which keeps storage and the group action linear in dim.
template <class S>
struct MonomialMatrix {
  std::vector<std::size_t> target;
  std::vector<S> coef;

  std::size_t dim() const noexcept { return target.size(); }
  Matrix<S> dense() const;
};

/// A group homomorphism G -> GL(dim). Immutable; the homomorphism property is
/// verified when the object is built (exactly on the exact path, entrywise to
/// kHomomorphismTol on the F64 path).
template <class S>
class Representation {
 public:
  static constexpr double kHomomorphismTol = 1e-12;

  Representation(std::shared_ptr<const GroupTable> group, std::vector<MonomialMatrix<S>> matrices, std::string name);
  Representation(std::shared_ptr<const GroupTable> group, std::vector<Matrix<S>> matrices, std::string name);

  const GroupTable& group() const noexcept { return *group_; }
  const std::shared_ptr<const GroupTable>& group_ptr() const noexcept { return group_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }
  static constexpr ScalarKind scalar_kind() noexcept { return ScalarTraits<S>::kind; }

  Matrix<S> matrix(ElementIndex g) const;
  bool is_monomial() const noexcept { return dense_.empty(); }
  const MonomialMatrix<S>& monomial(ElementIndex g) const { return monomial_.at(g); }

  /// g . x. Throws DimensionMismatch.
  Vector<S> apply(ElementIndex g, std::span<const S> x) const;

 private:
  void verify() const;

  std::shared_ptr<const GroupTable> group_;
  std::size_t dim_ = 0;
  std::string name_;
  std::vector<MonomialMatrix<S>> monomial_;
  std::vector<Matrix<S>> dense_;
};

/// g acts on the basis {e_h} by g . e_h = e_{gh}.
template <class S>
Representation<S> regular(std::shared_ptr<const GroupTable> group);

/// Z_n acting diagonally: element l multiplies coordinate k by w^{kl},
/// w = exp(2 pi i / n).
Representation<Complex> cyclic_fourier(std::size_t n);

/// D_n on C^n: r shifts coordinates, (r x)_i = x_{i-1 mod n}; s reflects,
/// (s x)_i = x_{-i mod n}.
template <class S>
Representation<S> dihedral_standard(std::size_t n);

/// Character of D_n with r -> 1, s -> -1.
template <class S>
Representation<S> character_S0(std::size_t n);

/// Character of D_n with r -> -1, s -> -1. Requires n even (ParityMismatch).
template <class S>
Representation<S> character_Sminus1(std::size_t n);

/// The 0-dimensional representation of a group.
template <class S>
Representation<S> zero_representation(std::shared_ptr<const GroupTable> group);

/// Block-diagonal sum. Throws GroupMismatch.
template <class S>
Representation<S> direct_sum(const Representation<S>& a, const Representation<S>& b);

/// Sum of all irreducibles of D_n, realized as the standard representation
/// plus S_0 (odd n) or plus S_0 and S_-1 (even n). Coordinates are
/// (x_0..x_{n-1}, s_0[, s_-1]). Requires n >= 3.
template <class S>
Representation<S> dihedral_cmf(std::size_t n);

/// S_n permuting the rows of an n x d matrix flattened row-major:
/// (sigma . X)[sigma(i)][j] = X[i][j]. Requires 1 <= n <= 8, d >= 1.
template <class S>
Representation<S> symmetric_matrix_rep(std::size_t n, std::size_t d);

template <class S>
Vector<S> apply(const Representation<S>& rep, ElementIndex g, std::span<const S> x) {
  return rep.apply(g, x);
}

/// (g_1 x, ..., g_|G| x) in group enumeration order.
template <class S>
std::vector<Vector<S>> orbit(const Representation<S>& rep, std::span<const S> x);

/// Builds a representation from a descriptor such as "regular:cyclic:5",
/// "regular:dihedral:4", "regular:symmetric:4", "fourier:5",
/// "dihedral-standard:6", "dihedral-cmf:5" or "snmatrix:5:3".
/// Throws ParseError, or ScalarKindMismatch for "fourier" on the exact path.
template <class S>
Representation<S> from_descriptor(std::string_view descriptor);

}  // namespace orbitkit
