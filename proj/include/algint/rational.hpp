#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace algint {

/// Raised when a textual scalar cannot be read.
class ScalarParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by intent
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Accepts "p" or "p/q" with an optional sign; q must be nonzero.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of Q(i): re + im·i with exact rational parts.
class GaussScalar {
 public:
  GaussScalar() = default;
  GaussScalar(long value) : re_(value) {}  // NOLINT: implicit by intent
  GaussScalar(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussScalar(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussScalar i() { return {Rational(0), Rational(1)}; }

  /// Reads forms like "3", "-1/2", "i", "-3/4i", "1/2+3/4i", "1-i".
  static GaussScalar parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussScalar conj() const { return {re_, -im_}; }
  /// |s|² = re² + im².
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  /// Canonical text form, inverse of parse().
  std::string str() const;

  GaussScalar& operator+=(const GaussScalar& o);
  GaussScalar& operator-=(const GaussScalar& o);
  GaussScalar& operator*=(const GaussScalar& o);
  /// Throws std::domain_error on division by zero.
  GaussScalar& operator/=(const GaussScalar& o);

  friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) {
    return a += b;
  }
  friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) {
    return a -= b;
  }
  friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) {
    return a *= b;
  }
  friend GaussScalar operator/(GaussScalar a, const GaussScalar& b) {
    return a /= b;
  }
  GaussScalar operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussScalar& a, const GaussScalar& b) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussScalar& s);

}  // namespace algint
