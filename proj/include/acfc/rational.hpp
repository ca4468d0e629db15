#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace acfc {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always normalized: den > 0 and gcd(|num|, den) = 1. Arithmetic is carried
/// out in 128-bit intermediates and throws std::overflow_error if the reduced
/// result does not fit.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double toDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string toString() const;

  /// Parses "p", "p/q", or a finite decimal such as "-0.25" or "1e-3".
  static Rational parse(std::string_view text);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational fromWide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace acfc
