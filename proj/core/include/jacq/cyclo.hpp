#pragma once

#include <string>

#include "jacq/errors.hpp"
#include "jacq/rational.hpp"

namespace jacq {

/// Element p + q*w of Q(w), with w a primitive cube root of unity.
/// The basis {1, w} with the reduction rule w^2 = -1 - w gives a unique
/// normal form, so equality is componentwise. Conjugation swaps the two
/// complex roots (w -> w^2) and is a ring automorphism.
class CycloRational {
 public:
  CycloRational() = default;
  CycloRational(int n) : p_(n) {}
  CycloRational(long n) : p_(n) {}
  CycloRational(Rational p) : p_(std::move(p)) {}
  CycloRational(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

  static CycloRational omega() { return {Rational(0), Rational(1)}; }

  /// w^n reduced mod 3 (n may be negative): 1, w, or -1-w.
  static CycloRational omega_pow(long n);

  /// i*sqrt(3) = 2w + 1.
  static CycloRational i_sqrt3() { return {Rational(1), Rational(2)}; }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }

  bool is_rational() const { return q_.is_zero(); }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

  /// The value as a Rational; throws NotRational if the w part is nonzero.
  const Rational& rational_part() const;

  /// Conjugation w -> w^2: p + q*w becomes (p - q) - q*w.
  CycloRational conj() const { return {p_ - q_, -q_}; }

  /// x * conj(x) = p^2 - p*q + q^2, a nonnegative rational.
  Rational norm() const { return p_ * p_ - p_ * q_ + q_ * q_; }

  CycloRational inverse() const;

  CycloRational& operator+=(const CycloRational& o) {
    p_ += o.p_;
    q_ += o.q_;
    return *this;
  }
  CycloRational& operator-=(const CycloRational& o) {
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
  }
  CycloRational& operator*=(const CycloRational& o);
  CycloRational& operator/=(const CycloRational& o) { return *this *= o.inverse(); }

  friend CycloRational operator+(CycloRational a, const CycloRational& b) { return a += b; }
  friend CycloRational operator-(CycloRational a, const CycloRational& b) { return a -= b; }
  friend CycloRational operator*(CycloRational a, const CycloRational& b) { return a *= b; }
  friend CycloRational operator/(CycloRational a, const CycloRational& b) { return a /= b; }
  friend CycloRational operator-(const CycloRational& a) { return {-a.p_, -a.q_}; }

  friend bool operator==(const CycloRational& a, const CycloRational& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const CycloRational& a, const CycloRational& b) { return !(a == b); }

  /// "p + q*w" with both parts in Rational string form, e.g. "5/3 + 4/3*w".
  std::string str() const { return p_.str() + " + " + q_.str() + "*w"; }

 private:
  Rational p_;
  Rational q_;
};

inline std::string to_string(const CycloRational& x) { return x.str(); }

/// w1^r + w2^r: 2 when r = 0 (mod 3), otherwise -1.
int epsilon(long r);

}  // namespace jacq
