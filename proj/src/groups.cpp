#include "orbitkit/groups.hpp"

#include <algorithm>
#include <numeric>

#include "orbitkit/error.hpp"

namespace orbitkit {

GroupTable GroupTable::from_table(std::string name, std::vector<std::string> labels,
                                  std::vector<std::vector<ElementIndex>> table, std::vector<ElementIndex> generators) {
  GroupTable g;
  g.name_ = std::move(name);
  g.order_ = table.size();
  if (g.order_ == 0) throw Error(ErrorCode::InvalidGroupTable, "empty group");
  if (labels.size() != g.order_) throw Error(ErrorCode::InvalidGroupTable, "label count differs from order");
  g.labels_ = std::move(labels);
  g.table_.reserve(g.order_ * g.order_);
  for (const auto& row : table) {
    if (row.size() != g.order_) throw Error(ErrorCode::InvalidGroupTable, "table is not square");
    for (ElementIndex v : row) {
      if (v >= g.order_) throw Error(ErrorCode::InvalidGroupTable, "table entry out of range");
      g.table_.push_back(v);
    }
  }
  g.inv_.assign(g.order_, g.order_);
  for (ElementIndex a = 0; a < g.order_; ++a) {
    for (ElementIndex b = 0; b < g.order_; ++b) {
      if (g.table_[a * g.order_ + b] == 0) {
        g.inv_[a] = b;
        break;
      }
    }
    if (g.inv_[a] == g.order_) throw Error(ErrorCode::InvalidGroupTable, "element " + std::to_string(a) + " has no inverse");
  }
  g.generators_ = std::move(generators);
  for (ElementIndex s : g.generators_) {
    if (s >= g.order_) throw Error(ErrorCode::InvalidGroupTable, "generator out of range");
  }
  g.validate();
  return g;
}

GroupTable GroupTable::from_permutations(std::string name, std::vector<std::vector<std::uint8_t>> perms,
                                         std::vector<ElementIndex> generators) {
  GroupTable g;
  g.name_ = std::move(name);
  g.order_ = perms.size();
  g.perms_ = std::move(perms);
  g.generators_ = std::move(generators);
  for (const auto& p : g.perms_) {
    std::string label;
    for (auto v : p) label.push_back(static_cast<char>('0' + v));
    g.labels_.push_back(std::move(label));
  }
  const std::size_t degree = g.perms_.front().size();
  g.inv_.resize(g.order_);
  std::vector<std::uint8_t> scratch(degree);
  for (ElementIndex a = 0; a < g.order_; ++a) {
    for (std::size_t i = 0; i < degree; ++i) scratch[g.perms_[a][i]] = static_cast<std::uint8_t>(i);
    g.inv_[a] = g.rank_permutation(scratch);
  }
  if (g.order_ <= kMaxTableOrder) {
    g.table_.resize(g.order_ * g.order_);
    for (ElementIndex a = 0; a < g.order_; ++a) {
      for (ElementIndex b = 0; b < g.order_; ++b) {
        for (std::size_t i = 0; i < degree; ++i) scratch[i] = g.perms_[a][g.perms_[b][i]];
        g.table_[a * g.order_ + b] = g.rank_permutation(scratch);
      }
    }
    g.validate();
  }
  return g;
}

ElementIndex GroupTable::mul(ElementIndex g, ElementIndex h) const {
  if (g >= order_ || h >= order_) throw Error(ErrorCode::OutOfRange, "group element index");
  if (!table_.empty()) return table_[g * order_ + h];
  const auto& a = perms_[g];
  const auto& b = perms_[h];
  std::vector<std::uint8_t> composed(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) composed[i] = a[b[i]];
  return rank_permutation(composed);
}

std::span<const std::uint8_t> GroupTable::permutation(ElementIndex g) const {
  if (perms_.empty()) throw Error(ErrorCode::OutOfRange, name_ + " is not a permutation group");
  return perms_.at(g);
}

// Lexicographic rank via the Lehmer code; matches the enumeration order of
// symmetric().
ElementIndex GroupTable::rank_permutation(std::span<const std::uint8_t> perm) const {
  const std::size_t n = perm.size();
  ElementIndex rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += perm[j] < perm[i] ? 1 : 0;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

void GroupTable::validate() const {
  const std::size_t n = order_;
  const auto at = [&](ElementIndex a, ElementIndex b) { return table_[a * n + b]; };
  for (ElementIndex g = 0; g < n; ++g) {
    if (at(0, g) != g || at(g, 0) != g) throw Error(ErrorCode::InvalidGroupTable, "element 0 is not the identity");
    if (at(g, inv_[g]) != 0 || at(inv_[g], g) != 0) throw Error(ErrorCode::InvalidGroupTable, "inverse table broken");
  }
  std::vector<char> seen(n);
  for (ElementIndex a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (ElementIndex b = 0; b < n; ++b) {
      if (seen[at(a, b)]++) throw Error(ErrorCode::InvalidGroupTable, "row " + std::to_string(a) + " repeats");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (ElementIndex b = 0; b < n; ++b) {
      if (seen[at(b, a)]++) throw Error(ErrorCode::InvalidGroupTable, "column " + std::to_string(a) + " repeats");
    }
  }
  if (n <= kAssociativityCheckOrder) {
    for (ElementIndex a = 0; a < n; ++a)
      for (ElementIndex b = 0; b < n; ++b)
        for (ElementIndex c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c))) throw Error(ErrorCode::InvalidGroupTable, "not associative");
  }
}

GroupTable cyclic(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "cyclic group needs n >= 1");
  std::vector<std::vector<ElementIndex>> table(n, std::vector<ElementIndex>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
  }
  std::vector<ElementIndex> gens;
  if (n > 1) gens.push_back(1);
  return GroupTable::from_table("Z" + std::to_string(n), std::move(labels), std::move(table), std::move(gens));
}

GroupTable dihedral(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::OutOfRange, "dihedral group needs n >= 2");
  // element (f, a) = s^f r^a lives at index f*n + a;
  // s^f r^a * s^g r^b = s^(f+g) r^((-1)^g a + b)
  const std::size_t order = 2 * n;
  std::vector<std::vector<ElementIndex>> table(order, std::vector<ElementIndex>(order));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t f = x / n, a = x % n;
    const std::string rot = a == 0 ? "" : a == 1 ? "r" : "r^" + std::to_string(a);
    labels.push_back(f == 0 ? (a == 0 ? "e" : rot) : "s" + rot);
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t g = y / n, b = y % n;
      const std::size_t twisted = g == 0 ? a : (n - a) % n;
      table[x][y] = ((f + g) % 2) * n + (twisted + b) % n;
    }
  }
  return GroupTable::from_table("D" + std::to_string(n), std::move(labels), std::move(table), {1, n});
}

GroupTable symmetric(std::size_t n) {
  if (n < 1 || n > 8) throw Error(ErrorCode::OutOfRange, "symmetric group needs 1 <= n <= 8");
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<std::vector<std::uint8_t>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  // transposition (0 1) and the n-cycle i -> i+1 generate S_n
  std::vector<ElementIndex> gens;
  if (n > 1) {
    std::vector<std::uint8_t> swap01(n), cycle(n);
    std::iota(swap01.begin(), swap01.end(), std::uint8_t{0});
    std::swap(swap01[0], swap01[1]);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint8_t>((i + 1) % n);
    for (const auto& target : {swap01, cycle}) {
      const auto it = std::find(perms.begin(), perms.end(), target);
      gens.push_back(static_cast<ElementIndex>(it - perms.begin()));
    }
  }
  return GroupTable::from_permutations("S" + std::to_string(n), std::move(perms), std::move(gens));
}

std::size_t element_order(const GroupTable& group, ElementIndex g) {
  std::size_t k = 1;
  ElementIndex x = g;
  while (x != 0) {
    x = group.mul(x, g);
    ++k;
  }
  return k;
}

}  // namespace orbitkit
