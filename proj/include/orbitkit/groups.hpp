#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace orbitkit {

using ElementIndex = std::size_t;

/// A finite group given by its element list and multiplication table.
/// Element 0 is always the identity.
///
/// Tables are materialized up to kMaxTableOrder elements; larger symmetric
/// groups multiply on demand by composing permutations (same results, no
/// quadratic memory).
class GroupTable {
 public:
  static constexpr std::size_t kMaxTableOrder = 720;
  static constexpr std::size_t kAssociativityCheckOrder = 64;

  /// Validates the Latin-square, identity and inverse properties, and
  /// associativity for orders up to kAssociativityCheckOrder.
  /// Throws Error(InvalidGroupTable).
  static GroupTable from_table(std::string name, std::vector<std::string> labels,
                               std::vector<std::vector<ElementIndex>> table, std::vector<ElementIndex> generators = {});

  /// Symmetric group on {0..degree-1}; `perms` must list every permutation
  /// exactly once, identity first.
  static GroupTable from_permutations(std::string name, std::vector<std::vector<std::uint8_t>> perms,
                                      std::vector<ElementIndex> generators);

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  const std::string& label(ElementIndex g) const { return labels_.at(g); }
  std::span<const std::string> labels() const noexcept { return labels_; }

  ElementIndex mul(ElementIndex g, ElementIndex h) const;
  ElementIndex inv(ElementIndex g) const { return inv_.at(g); }

  /// A generating set (used for cheap homomorphism checks).
  std::span<const ElementIndex> generators() const noexcept { return generators_; }

  bool is_permutation_group() const noexcept { return !perms_.empty(); }
  /// One-line notation of element g of a symmetric group: g maps i to perm[i].
  std::span<const std::uint8_t> permutation(ElementIndex g) const;

  bool materialized() const noexcept { return !table_.empty(); }

 private:
  GroupTable() = default;
  void validate() const;
  ElementIndex rank_permutation(std::span<const std::uint8_t> perm) const;

  std::string name_;
  std::size_t order_ = 0;
  std::vector<std::string> labels_;
  std::vector<ElementIndex> table_;  // row-major order_ x order_, may be empty
  std::vector<ElementIndex> inv_;
  std::vector<ElementIndex> generators_;
  std::vector<std::vector<std::uint8_t>> perms_;
};

/// Z_n with mul(i, j) = (i + j) mod n. Requires n >= 1.
GroupTable cyclic(std::size_t n);

/// D_n of order 2n: elements r^a (index a) followed by s r^a (index n + a),
/// with r^n = s^2 = e and s r s = r^-1. Requires n >= 2.
GroupTable dihedral(std::size_t n);

/// S_n, permutations in lexicographic one-line order; mul(g, h) = g o h,
/// i.e. (gh)(i) = g(h(i)). Requires 1 <= n <= 8.
GroupTable symmetric(std::size_t n);

std::size_t element_order(const GroupTable& group, ElementIndex g);

}  // namespace orbitkit
