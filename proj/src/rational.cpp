#include "reprules/rational.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "reprules/errors.hpp"

namespace reprules {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw ParameterError("rational overflow");
  return static_cast<std::int64_t>(v);
}

Rational make_reduced(i128 num, i128 den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(checked_narrow(num), checked_narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { return ParameterError("not a number: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t n = 0, d = 0;
    auto lhs = text.substr(0, slash), rhs = text.substr(slash + 1);
    auto r1 = std::from_chars(lhs.data(), lhs.data() + lhs.size(), n);
    auto r2 = std::from_chars(rhs.data(), rhs.data() + rhs.size(), d);
    if (r1.ec != std::errc() || r1.ptr != lhs.data() + lhs.size() || r2.ec != std::errc() ||
        r2.ptr != rhs.data() + rhs.size() || d == 0)
      throw fail();
    return make_reduced(n, d);
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  i128 mantissa = 0;
  int scale = 0;
  int digits = 0;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      if (mantissa > (i128)1 << 100) throw fail();
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) ++scale;
      ++digits;
    } else {
      break;
    }
  }
  if (digits == 0) throw fail();
  int exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw fail();
    ++pos;
    auto rest = text.substr(pos);
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    auto r = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
    if (r.ec != std::errc() || r.ptr != rest.data() + rest.size()) throw fail();
  }
  int power = exponent - scale;
  if (power > 30 || power < -30) throw fail();
  i128 num = negative ? -mantissa : mantissa;
  i128 den = 1;
  for (int i = 0; i < power; ++i) num *= 10;
  for (int i = 0; i < -power; ++i) den *= 10;
  return make_reduced(num, den);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw ParameterError("non-finite value");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return parse(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
}

Rational Rational::reduce(__int128 num, __int128 den) { return make_reduced(num, den); }

double Rational::to_double() const {
  // Both parts are exact in long double's 64-bit mantissa.
  return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t Rational::ceil_mul(std::int64_t n) const {
  i128 p = (i128)num_ * n;
  i128 q = p / den_;
  if (q * den_ < p) ++q;
  return checked_narrow(q);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = (i128)a.num_ * b.den_;
  i128 rhs = (i128)b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace reprules
