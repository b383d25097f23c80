#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace reprules {

// Exact ratio of two 64-bit integers, denominator always positive and the
// pair kept in lowest terms. Products are formed in 128 bits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  // Parses "0.1", "1", "3/10", "1e-2". Throws ParameterError on garbage.
  static Rational parse(std::string_view text);
  // Shortest round-trip decimal form of the double, read back exactly.
  static Rational from_double(double value);
  // Reduces a wide ratio; throws ParameterError if it does not fit.
  static Rational reduce(__int128 num, __int128 den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  // Single rounding: exact whenever both parts fit in 53 bits.
  double to_double() const;
  std::string str() const;

  // Smallest integer c with c >= *this * n (n >= 0).
  std::int64_t ceil_mul(std::int64_t n) const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace reprules
