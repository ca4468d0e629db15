#include "acfc/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "acfc/errors.hpp"

namespace acfc {

namespace {

__int128 gcdWide(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fitsInt64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = fromWide(num, den);
}

Rational Rational::fromWide(__int128 num, __int128 den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcdWide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fitsInt64(num) || !fitsInt64(den)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::string Rational::toString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw InvalidArgument("cannot parse rational '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational p = parse(text.substr(0, slash));
    const Rational q = parse(text.substr(slash + 1));
    if (q == Rational(0)) return fail();
    return p / q;
  }

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  __int128 mantissa = 0;
  int scale = 0;
  bool digits = false;
  bool seenPoint = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (mantissa > std::numeric_limits<std::int64_t>::max()) return fail();
      if (seenPoint) ++scale;
      digits = true;
    } else if (c == '.' && !seenPoint) {
      seenPoint = true;
    } else {
      break;
    }
  }
  if (!digits) return fail();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return fail();
    ++i;
    bool expNeg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      expNeg = text[i] == '-';
      ++i;
    }
    int exponent = 0;
    bool expDigits = false;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return fail();
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 30) return fail();
      expDigits = true;
    }
    if (!expDigits) return fail();
    scale += expNeg ? exponent : -exponent;
  }
  __int128 num = negative ? -mantissa : mantissa;
  __int128 den = 1;
  for (; scale > 0; --scale) {
    den *= 10;
    if (!fitsInt64(den)) return fail();
  }
  for (; scale < 0; ++scale) {
    num *= 10;
    if (!fitsInt64(num)) return fail();
  }
  return fromWide(num, den);
}

Rational Rational::operator-() const { return fromWide(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::fromWide(static_cast<__int128>(a.num_) * b.den_ +
                                static_cast<__int128>(b.num_) * a.den_,
                            static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::fromWide(static_cast<__int128>(a.num_) * b.num_,
                            static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InvalidArgument("rational division by zero");
  return Rational::fromWide(static_cast<__int128>(a.num_) * b.den_,
                            static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace acfc
