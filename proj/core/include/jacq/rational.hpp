#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jacq {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator (zero is 0/1). Canonical form makes equality a plain
/// componentwise comparison, which every identity check relies on.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "p/q" or "p"; normalizes.
  explicit Rational(std::string_view text);

  /// 2^e, exact for either sign of e.
  static Rational pow2(long e);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;  // kept canonical by construction and by mpq arithmetic
};

inline std::string to_string(const Rational& x) { return x.str(); }

}  // namespace jacq
