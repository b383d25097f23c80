#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "reprules/itemset.hpp"
#include "reprules/rational.hpp"

namespace reprules {

// Fixed-size bit vector over transaction ids.
class TidSet {
 public:
  TidSet() = default;
  explicit TidSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  void insert(std::size_t tid) { words_[tid / 64] |= std::uint64_t{1} << (tid % 64); }
  bool contains(std::size_t tid) const { return (words_[tid / 64] >> (tid % 64)) & 1U; }
  std::size_t count() const;
  std::size_t universe() const { return universe_; }

  TidSet& operator&=(const TidSet& other);
  friend TidSet operator&(TidSet a, const TidSet& b) { return a &= b; }
  // |a ∩ b| without materializing the intersection.
  static std::size_t intersection_count(const TidSet& a, const TidSet& b);

  std::vector<std::size_t> to_vector() const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Item {
  ItemId id = 0;
  std::string label;
};

struct Transaction {
  std::size_t tid = 0;
  Itemset items;
};

// Immutable after construction; all queries are const and safe to share
// between threads.
class TransactionDataset {
 public:
  // Each inner vector is one transaction's tokens. Tokens are interned in
  // first-appearance order; empty transactions are skipped.
  static TransactionDataset from_tokens(const std::vector<std::vector<std::string>>& rows);

  const std::vector<Transaction>& transactions() const { return transactions_; }
  std::size_t transaction_count() const { return transactions_.size(); }
  std::size_t item_count() const { return items_.size(); }

  const Item& item(ItemId id) const;
  const std::vector<Item>& items() const { return items_; }
  std::optional<ItemId> find(std::string_view label) const;
  // Throws DomainError on an unknown label.
  Itemset itemset(const std::vector<std::string>& labels) const;
  std::string render(const Itemset& s, char sep = ' ') const;

  const TidSet& tids(ItemId id) const;

  // Number of transactions containing every item of x; |D| for the empty set.
  std::uint64_t support(const Itemset& x) const;

 private:
  std::vector<Item> items_;
  std::unordered_map<std::string, ItemId> by_label_;
  std::vector<Transaction> transactions_;
  std::vector<TidSet> tid_lists_;
};

// Whitespace-separated basket lines; blank lines and lines starting with
// '#' are skipped. Throws EmptyDatasetError when nothing remains.
TransactionDataset load_basket(std::istream& in);
TransactionDataset load_basket_file(const std::filesystem::path& path);

struct DatasetStats {
  std::size_t item_count = 0;
  std::size_t transaction_count = 0;
  std::size_t item_occurrences = 0;

  Rational avg_transaction_size() const;
};

DatasetStats dataset_stats(const TransactionDataset& ds);

// Per-itemset support memo. Not thread-safe: one cache per worker.
class SupportCache {
 public:
  explicit SupportCache(const TransactionDataset& ds) : ds_(&ds) {}

  void seed(const Itemset& x, std::uint64_t support) { memo_.emplace(x, support); }
  std::uint64_t get(const Itemset& x);
  std::size_t size() const { return memo_.size(); }
  const TransactionDataset& dataset() const { return *ds_; }

 private:
  const TransactionDataset* ds_;
  std::unordered_map<Itemset, std::uint64_t, ItemsetHash> memo_;
};

}  // namespace reprules
