#include "reprules/measures.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "reprules/errors.hpp"

namespace reprules {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<MeasureInfo, 6> kRegistry{{
    {MeasureId::frequency, "frequency", "freq", Preference::higher, 0.0, 1.0},
    {MeasureId::confidence, "confidence", "conf", Preference::higher, 0.0, 1.0},
    {MeasureId::recall, "recall", "recall", Preference::higher, 0.0, 1.0},
    {MeasureId::pearl, "pearl", "pearl", Preference::higher, 0.0, 1.0},
    {MeasureId::loevinger, "loevinger", "loev", Preference::higher, -kInf, 1.0},
    {MeasureId::zhang, "zhang", "zhang", Preference::higher, -1.0, 1.0},
}};

using i128 = __int128;

}  // namespace

std::span<const MeasureInfo> measure_registry() { return kRegistry; }

const MeasureInfo& info(MeasureId m) { return kRegistry[static_cast<std::size_t>(m)]; }

std::string_view name(MeasureId m) { return info(m).name; }

std::optional<MeasureId> parse_measure(std::string_view text) {
  for (const auto& mi : kRegistry)
    if (text == mi.name || text == mi.short_name) return mi.id;
  return std::nullopt;
}

std::string valid_measure_names() {
  std::string out;
  for (const auto& mi : kRegistry) {
    if (!out.empty()) out += ", ";
    out += mi.short_name;
  }
  return out;
}

std::vector<MeasureId> parse_measure_list(std::string_view text) {
  std::vector<MeasureId> out;
  while (true) {
    auto comma = text.find(',');
    auto tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    auto m = parse_measure(tok);
    if (!m)
      throw ParameterError("unknown measure '" + std::string(tok) +
                           "' (valid: " + valid_measure_names() + ")");
    if (std::find(out.begin(), out.end(), *m) != out.end())
      throw ParameterError("measure '" + std::string(tok) + "' listed twice");
    out.push_back(*m);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Evaluation evaluate_exact(const SupportCounts& s, MeasureId m) {
  const i128 n = s.transactions, x = s.premise, y = s.conclusion, xy = s.joint;
  if (n <= 0 || x <= 0 || y <= 0)
    throw ParameterError("measure evaluation needs positive |D|, supp(X), supp(Y)");
  // n * P(XY) - n * P(X)P(Y), scaled by n
  const i128 lift_num = n * xy - x * y;
  switch (m) {
    case MeasureId::frequency:
      return {Rational::reduce(xy, n)};
    case MeasureId::confidence:
      return {Rational::reduce(xy, x)};
    case MeasureId::recall:
      return {Rational::reduce(xy, y)};
    case MeasureId::pearl:
      return {Rational::reduce(lift_num < 0 ? -lift_num : lift_num, n * n)};
    case MeasureId::loevinger:
      if (y == n) return {Rational(xy == x ? 1 : 0), true};
      return {Rational::reduce(lift_num, x * (n - y))};
    case MeasureId::zhang: {
      const i128 den = std::max(xy * (n - y), y * (x - xy));
      if (den == 0) return {Rational(0), true};
      return {Rational::reduce(lift_num, den)};
    }
  }
  throw ParameterError("unknown measure");
}

SupportCounts support_counts(SupportCache& cache, const Rule& r) {
  SupportCounts s;
  s.transactions = static_cast<std::int64_t>(cache.dataset().transaction_count());
  s.premise = static_cast<std::int64_t>(cache.get(r.premise));
  s.conclusion = static_cast<std::int64_t>(cache.get(r.conclusion));
  s.joint = static_cast<std::int64_t>(cache.get(r.items()));
  return s;
}

double evaluate(const TransactionDataset& ds, const Rule& r, MeasureId m) {
  SupportCache cache(ds);
  return evaluate_exact(support_counts(cache, r), m).value.to_double();
}

}  // namespace reprules
