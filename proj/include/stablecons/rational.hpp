#ifndef STABLECONS_RATIONAL_HPP
#define STABLECONS_RATIONAL_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace stablecons {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational in [0,1], kept in lowest terms.
class Rational01 {
 public:
  Rational01() = default;

  Rational01(const BigInt& numerator, const BigInt& denominator) {
    if (denominator <= 0) throw std::invalid_argument("denominator must be positive");
    if (numerator < 0 || numerator > denominator)
      throw std::invalid_argument("rational value outside [0,1]");
    value_ = BigRational(numerator, denominator);
  }

  explicit Rational01(const BigRational& value) : value_(value) {
    if (value_ < 0 || value_ > 1) throw std::invalid_argument("rational value outside [0,1]");
  }

  static Rational01 zero() { return Rational01(); }
  static Rational01 one() { return Rational01(BigInt(1), BigInt(1)); }

  /// Accepts "p/q" or an integer literal, i.e. "0" or "1".
  static Rational01 parse(std::string_view text) {
    auto parse_int = [&](std::string_view digits) {
      if (digits.empty() || digits.size() > 4096) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      for (char c : digits)
        if (c < '0' || c > '9') throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      return BigInt(std::string(digits));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational01(parse_int(text), BigInt(1));
    return Rational01(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  const BigRational& value() const noexcept { return value_; }

  bool is_one() const { return value_ == 1; }
  bool is_zero() const { return value_ == 0; }

  /// "p/q" in lowest terms, or "0" / "1".
  std::string to_string() const {
    const BigInt d = denominator();
    if (d == 1) return numerator().str();
    return numerator().str() + "/" + d.str();
  }

  friend bool operator==(const Rational01& a, const Rational01& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational01& a, const Rational01& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  BigRational value_{0};
};

}  // namespace stablecons

#endif  // STABLECONS_RATIONAL_HPP
