#pragma once

// Exact scalars: reduced rationals with checked 64-bit storage, and Gaussian
// rationals built on top of them. Every operation either returns the exact
// result or throws std::overflow_error; there is no silent wraparound.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace glhecke {

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT implicit
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "a", "-a" or "a/b" (no whitespace). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::int64_t num() const { return num_; }
  [[nodiscard]] std::int64_t den() const { return den_; }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }
  [[nodiscard]] bool is_zero() const { return num_ == 0; }
  [[nodiscard]] int sign() const { return (num_ > 0) - (num_ < 0); }

  /// Integer value; throws std::domain_error unless is_integer().
  [[nodiscard]] std::int64_t to_integer() const;
  /// True when 2*x is an integer.
  [[nodiscard]] bool is_half_integer() const { return den_ == 1 || den_ == 2; }

  [[nodiscard]] Rational half() const;
  [[nodiscard]] Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// "a" for integers, "a/b" otherwise; always lowest terms.
  [[nodiscard]] std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Gaussian rational re + im*i. The ordering operators are a fixed
/// lexicographic (re, im) order used for canonical sorting, not a field order.
class Scalar {
 public:
  constexpr Scalar() = default;
  Scalar(std::int64_t value) : re_(value) {}  // NOLINT implicit
  Scalar(Rational re) : re_(re) {}            // NOLINT implicit
  Scalar(Rational re, Rational im) : re_(re), im_(im) {}

  /// Parses "a/b", "a/b+c/di", "a/b-c/di", "c/di". Throws std::invalid_argument.
  static Scalar parse(std::string_view text);

  [[nodiscard]] const Rational& re() const { return re_; }
  [[nodiscard]] const Rational& im() const { return im_; }
  [[nodiscard]] bool is_real() const { return im_.is_zero(); }
  [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] bool is_integer() const { return is_real() && re_.is_integer(); }

  [[nodiscard]] Scalar half() const { return {re_.half(), im_.half()}; }
  [[nodiscard]] Scalar conj() const { return {re_, -im_}; }
  [[nodiscard]] Rational norm2() const { return re_ * re_ + im_ * im_; }

  /// Inverse of parse(): "a/b" when real, else "a/b+c/di".
  [[nodiscard]] std::string str() const;

  Scalar operator-() const { return {-re_, -im_}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (auto c = a.re_ <=> b.re_; c != 0) return c;
    return a.im_ <=> b.im_;
  }

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace glhecke
