#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace reprules {

using ItemId = std::uint32_t;

// Strictly ascending list of item ids; the canonical form of a set of items.
class Itemset {
 public:
  Itemset() = default;
  Itemset(std::initializer_list<ItemId> ids) : Itemset(std::vector<ItemId>(ids)) {}
  // Sorts and collapses duplicates.
  explicit Itemset(std::vector<ItemId> ids);

  // Caller guarantees ids are already strictly ascending.
  static Itemset from_sorted(std::vector<ItemId> ids);

  std::span<const ItemId> items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  ItemId operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool contains(ItemId id) const;
  // this ⊆ other
  bool is_subset_of(const Itemset& other) const;
  bool disjoint_with(const Itemset& other) const;
  Itemset unite(const Itemset& other) const;

  friend bool operator==(const Itemset&, const Itemset&) = default;
  // Lexicographic on the id sequence.
  friend auto operator<=>(const Itemset& a, const Itemset& b) { return a.items_ <=> b.items_; }

 private:
  std::vector<ItemId> items_;
};

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const noexcept;
};

}  // namespace reprules
