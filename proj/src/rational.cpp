#include "algint/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace algint {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t pos = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (pos == s.size()) return false;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw ScalarParseError("malformed rational '" + std::string(whole) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(mpq_class(parse_integer(text, text)));
  }
  mpz_class num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-')) {
    throw ScalarParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text, text);
  if (den == 0) {
    throw ScalarParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

GaussScalar GaussScalar::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ScalarParseError("empty scalar");
  if (s.back() != 'i') return GaussScalar(Rational::parse(s));

  s.pop_back();
  // Split at the last sign that is not leading; the tail is the imaginary
  // coefficient.
  std::size_t split = std::string::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if (s[p] == '+' || s[p] == '-') {
      split = p;
      break;
    }
  }
  std::string real_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string imag_part = split == std::string::npos ? s : s.substr(split);
  Rational im;
  if (imag_part.empty() || imag_part == "+") {
    im = Rational(1);
  } else if (imag_part == "-") {
    im = Rational(-1);
  } else {
    im = Rational::parse(imag_part);
  }
  Rational re = real_part.empty() ? Rational(0) : Rational::parse(real_part);
  return {re, im};
}

std::string GaussScalar::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == Rational(1)) {
    imag = "i";
  } else if (im_ == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im_.str() + "i";
  }
  if (re_.is_zero()) return imag;
  if (imag[0] != '-') imag = "+" + imag;
  return re_.str() + imag;
}

GaussScalar& GaussScalar::operator+=(const GaussScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
GaussScalar& GaussScalar::operator-=(const GaussScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
GaussScalar& GaussScalar::operator*=(const GaussScalar& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}
GaussScalar& GaussScalar::operator/=(const GaussScalar& o) {
  if (o.is_zero()) throw std::domain_error("gaussian division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm2();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussScalar& s) {
  return os << s.str();
}

}  // namespace algint
