#include "jacq/cyclo.hpp"

namespace jacq {

namespace {
int mod3(long n) { return static_cast<int>(((n % 3) + 3) % 3); }
}  // namespace

CycloRational CycloRational::omega_pow(long n) {
  switch (mod3(n)) {
    case 0: return CycloRational(1);
    case 1: return omega();
    default: return {Rational(-1), Rational(-1)};  // w^2 = -1 - w
  }
}

const Rational& CycloRational::rational_part() const {
  if (!q_.is_zero()) {
    throw NotRational("rational_part: nonzero omega component " + str());
  }
  return p_;
}

CycloRational& CycloRational::operator*=(const CycloRational& o) {
  // (p1 + q1 w)(p2 + q2 w) with w^2 = -1 - w:
  //   rational part p1 p2 - q1 q2, omega part p1 q2 + p2 q1 - q1 q2.
  const Rational qq = q_ * o.q_;
  const Rational p = p_ * o.p_ - qq;
  q_ = p_ * o.q_ + o.p_ * q_ - qq;
  p_ = p;
  return *this;
}

CycloRational CycloRational::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) {
    throw std::domain_error("CycloRational: inverse of zero");
  }
  const CycloRational c = conj();
  return {c.p() / n, c.q() / n};
}

int epsilon(long r) { return mod3(r) == 0 ? 2 : -1; }

}  // namespace jacq
