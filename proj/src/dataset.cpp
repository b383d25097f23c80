#include "reprules/dataset.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "reprules/errors.hpp"

namespace reprules {

std::size_t TidSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

TidSet& TidSet::operator&=(const TidSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::size_t TidSet::intersection_count(const TidSet& a, const TidSet& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i)
    n += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
  return n;
}

std::vector<std::size_t> TidSet::to_vector() const {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < universe_; ++t)
    if (contains(t)) out.push_back(t);
  return out;
}

TransactionDataset TransactionDataset::from_tokens(
    const std::vector<std::vector<std::string>>& rows) {
  TransactionDataset ds;
  for (const auto& row : rows) {
    std::vector<ItemId> ids;
    ids.reserve(row.size());
    for (const auto& token : row) {
      auto [it, inserted] = ds.by_label_.try_emplace(token, static_cast<ItemId>(ds.items_.size()));
      if (inserted) ds.items_.push_back(Item{it->second, token});
      ids.push_back(it->second);
    }
    if (ids.empty()) continue;
    ds.transactions_.push_back(Transaction{ds.transactions_.size(), Itemset(std::move(ids))});
  }
  if (ds.transactions_.empty()) throw EmptyDatasetError("dataset contains no transactions");

  ds.tid_lists_.assign(ds.items_.size(), TidSet(ds.transactions_.size()));
  for (const auto& t : ds.transactions_)
    for (ItemId id : t.items) ds.tid_lists_[id].insert(t.tid);
  return ds;
}

const Item& TransactionDataset::item(ItemId id) const {
  if (id >= items_.size()) throw DomainError("unknown item id " + std::to_string(id));
  return items_[id];
}

std::optional<ItemId> TransactionDataset::find(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

Itemset TransactionDataset::itemset(const std::vector<std::string>& labels) const {
  std::vector<ItemId> ids;
  for (const auto& l : labels) {
    auto id = find(l);
    if (!id) throw DomainError("unknown item '" + l + "'");
    ids.push_back(*id);
  }
  return Itemset(std::move(ids));
}

std::string TransactionDataset::render(const Itemset& s, char sep) const {
  std::string out;
  for (ItemId id : s) {
    if (!out.empty()) out += sep;
    out += item(id).label;
  }
  return out;
}

const TidSet& TransactionDataset::tids(ItemId id) const {
  if (id >= tid_lists_.size()) throw DomainError("unknown item id " + std::to_string(id));
  return tid_lists_[id];
}

std::uint64_t TransactionDataset::support(const Itemset& x) const {
  if (x.empty()) return transactions_.size();
  for (ItemId id : x)
    if (id >= tid_lists_.size()) throw DomainError("unknown item id " + std::to_string(id));
  if (x.size() == 1) return tid_lists_[x[0]].count();
  if (x.size() == 2) return TidSet::intersection_count(tid_lists_[x[0]], tid_lists_[x[1]]);

  // Start from the rarest item to shrink early.
  auto rarest = std::min_element(x.begin(), x.end(), [&](ItemId a, ItemId b) {
    return tid_lists_[a].count() < tid_lists_[b].count();
  });
  TidSet acc = tid_lists_[*rarest];
  for (ItemId id : x)
    if (id != *rarest) acc &= tid_lists_[id];
  return acc.count();
}

TransactionDataset load_basket(std::istream& in) {
  if (!in) throw InputError("unreadable input stream");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<std::string> row;
    for (std::string tok; tokens >> tok;) row.push_back(std::move(tok));
    rows.push_back(std::move(row));
  }
  if (in.bad()) throw InputError("read error");
  return TransactionDataset::from_tokens(rows);
}

TransactionDataset load_basket_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return load_basket(in);
}

Rational DatasetStats::avg_transaction_size() const {
  if (transaction_count == 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(item_occurrences),
                  static_cast<std::int64_t>(transaction_count));
}

DatasetStats dataset_stats(const TransactionDataset& ds) {
  DatasetStats s;
  s.item_count = ds.item_count();
  s.transaction_count = ds.transaction_count();
  for (const auto& t : ds.transactions()) s.item_occurrences += t.items.size();
  return s;
}

std::uint64_t SupportCache::get(const Itemset& x) {
  if (auto it = memo_.find(x); it != memo_.end()) return it->second;
  auto s = ds_->support(x);
  memo_.emplace(x, s);
  return s;
}

}  // namespace reprules
