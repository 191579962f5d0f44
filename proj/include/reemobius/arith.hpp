#pragma once

// Exact integer and rational types used throughout the library.
//
// Natural is a non-negative integer of unbounded size; subtraction that would
// go below zero throws instead of wrapping. Integer is the signed type used for
// intermediate Möbius-weighted sums. Rational is always kept in lowest terms
// with a positive denominator.

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace reemobius {

using Integer = boost::multiprecision::cpp_int;

/// Raised when two computations that must agree do not (a catalog or table
/// defect rather than bad user input).
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  explicit Natural(Integer v) : value_(std::move(v)) {
    if (value_ < 0) {
      throw std::domain_error("Natural: negative value " + value_.str());
    }
  }

  /// Parses a plain decimal string (digits only).
  static Natural parse(std::string_view decimal) {
    if (decimal.empty()) {
      throw std::invalid_argument("Natural: empty string");
    }
    for (char c : decimal) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("Natural: not a decimal string: " +
                                    std::string(decimal));
      }
    }
    return Natural(Integer(std::string(decimal)));
  }

  static Natural pow(const Natural& base, unsigned exponent) {
    return Natural(Integer(boost::multiprecision::pow(base.value_, exponent)));
  }

  static Natural gcd(const Natural& a, const Natural& b) {
    return Natural(Integer(boost::multiprecision::gcd(a.value_, b.value_)));
  }

  /// Quotient and remainder; throws on division by zero.
  static std::pair<Natural, Natural> divmod(const Natural& a,
                                            const Natural& b) {
    if (b.is_zero()) {
      throw std::domain_error("Natural: division by zero");
    }
    Integer q;
    Integer r;
    boost::multiprecision::divide_qr(a.value_, b.value_, q, r);
    return {Natural(std::move(q)), Natural(std::move(r))};
  }

  /// Exact quotient; throws InconsistencyError when b does not divide a.
  static Natural exact_div(const Natural& a, const Natural& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
      throw InconsistencyError("Natural: " + b.str() + " does not divide " +
                               a.str());
    }
    return q;
  }

  const Integer& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.is_zero(); }
  bool divides(const Natural& other) const {
    return !is_zero() && Integer(other.value_ % value_).is_zero();
  }
  std::string str() const { return value_.str(); }

  Natural& operator+=(const Natural& o) {
    value_ += o.value_;
    return *this;
  }
  Natural& operator-=(const Natural& o) {
    if (o.value_ > value_) {
      throw std::domain_error("Natural: subtraction below zero");
    }
    value_ -= o.value_;
    return *this;
  }
  Natural& operator*=(const Natural& o) {
    value_ *= o.value_;
    return *this;
  }
  Natural& operator/=(const Natural& o) {
    *this = divmod(*this, o).first;
    return *this;
  }
  Natural& operator%=(const Natural& o) {
    *this = divmod(*this, o).second;
    return *this;
  }

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

  friend bool operator==(const Natural& a, const Natural& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.value_;
  }

 private:
  Integer value_{0};
};

class Rational {
 public:
  Rational() = default;
  Rational(const Natural& n) : value_(n.value()) {}  // NOLINT
  Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) {
      throw std::domain_error("Rational: zero denominator");
    }
    // cpp_rational rejects a negative denominator, so move the sign first.
    value_ = den < 0 ? boost::multiprecision::cpp_rational(Integer(-num), Integer(-den))
                     : boost::multiprecision::cpp_rational(num, den);
  }

  /// Parses "num/den" or a bare integer.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return {Integer(std::string(text)), Integer(1)};
    }
    return {Integer(std::string(text.substr(0, slash))),
            Integer(std::string(text.substr(slash + 1)))};
  }

  Integer num() const { return boost::multiprecision::numerator(value_); }
  Integer den() const { return boost::multiprecision::denominator(value_); }
  bool is_integer() const { return den() == 1; }

  /// The value as a Natural; throws unless it is a non-negative integer.
  Natural to_natural() const {
    if (!is_integer()) {
      throw InconsistencyError("Rational: " + str() + " is not integral");
    }
    return Natural(num());
  }

  std::string str() const { return num().str() + "/" + den().str(); }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.value_ == 0) {
      throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  boost::multiprecision::cpp_rational value_{0};
};

}  // namespace reemobius
