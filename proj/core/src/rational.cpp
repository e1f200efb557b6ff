#include "jacq/rational.hpp"

#include <stdexcept>

namespace jacq {

Rational::Rational(const Integer& num, const Integer& den) : v_() {
  if (sgn(den) == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(std::string_view text) : v_() {
  if (v_.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  }
  if (sgn(v_.get_den()) == 0) {
    throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
  }
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow2(long e) {
  Integer p(1);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace jacq
