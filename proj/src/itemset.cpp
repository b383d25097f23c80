#include "reprules/itemset.hpp"

#include <algorithm>

namespace reprules {

Itemset::Itemset(std::vector<ItemId> ids) : items_(std::move(ids)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

Itemset Itemset::from_sorted(std::vector<ItemId> ids) {
  Itemset s;
  s.items_ = std::move(ids);
  return s;
}

bool Itemset::contains(ItemId id) const {
  return std::binary_search(items_.begin(), items_.end(), id);
}

bool Itemset::is_subset_of(const Itemset& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool Itemset::disjoint_with(const Itemset& other) const {
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a == *b) return false;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return true;
}

Itemset Itemset::unite(const Itemset& other) const {
  std::vector<ItemId> out;
  out.reserve(items_.size() + other.items_.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out));
  return from_sorted(std::move(out));
}

std::size_t ItemsetHash::operator()(const Itemset& s) const noexcept {
  // FNV-1a over the id sequence.
  std::uint64_t h = 1469598103934665603ULL;
  for (ItemId id : s) {
    h ^= id;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace reprules
