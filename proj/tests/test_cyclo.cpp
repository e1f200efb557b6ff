#include <doctest.h>

#include <complex>
#include <random>

#include "jacq/cyclo.hpp"
#include "jacq/errors.hpp"

using jacq::CycloRational;
using jacq::Rational;

namespace {

// Independent floating-point oracle: embed p + q*w with w = (-1 + i*sqrt3)/2.
std::complex<double> embed(const CycloRational& x) {
  const std::complex<double> w(-0.5, std::sqrt(3.0) / 2.0);
  auto d = [](const Rational& r) {
    return mpq_get_d(mpq_class(r.numerator(), r.denominator()).get_mpq_t());
  };
  return d(x.p()) + d(x.q()) * w;
}

CycloRational rand_cyclo(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("omega satisfies the defining relation") {
  const CycloRational w = CycloRational::omega();
  CHECK(w * w == CycloRational(Rational(-1), Rational(-1)));
  CHECK(w * w * w == CycloRational(1));
  // (i sqrt3)^2 = -3
  CHECK(CycloRational::i_sqrt3() * CycloRational::i_sqrt3() == CycloRational(-3));
}

TEST_CASE("binet coefficient product a*b = 7/3") {
  const CycloRational a{Rational(5, 3), Rational(4, 3)};
  const CycloRational b{Rational(1, 3), Rational(-4, 3)};
  const CycloRational prod = a * b;
  CHECK(prod == CycloRational(Rational(7, 3)));
  // cross-check against complex multiplication
  const auto approx = embed(a) * embed(b);
  CHECK(std::abs(approx.real() - 7.0 / 3.0) < 1e-12);
  CHECK(std::abs(approx.imag()) < 1e-12);
  CHECK(b == a.conj());
}

TEST_CASE("conjugation swaps the complex roots") {
  const CycloRational w = CycloRational::omega();
  CHECK(w.conj() == CycloRational(Rational(-1), Rational(-1)));
  CHECK(CycloRational(5).conj() == CycloRational(5));
  CHECK(CycloRational::i_sqrt3().conj() == -CycloRational::i_sqrt3());

  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    const CycloRational x = rand_cyclo(rng), y = rand_cyclo(rng);
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
  }
}

TEST_CASE("omega_pow reduces mod 3 with negative support") {
  CHECK(CycloRational::omega_pow(3) == CycloRational(1));
  CHECK(CycloRational::omega_pow(-1) == CycloRational(Rational(-1), Rational(-1)));
  CHECK(CycloRational::omega_pow(7) == CycloRational::omega());
  for (long n = -30; n <= 30; ++n) {
    CHECK(CycloRational::omega_pow(n) * CycloRational::omega_pow(-n) == CycloRational(1));
  }
}

TEST_CASE("epsilon matches its omega definition") {
  CHECK(jacq::epsilon(3) == 2);
  CHECK(jacq::epsilon(1) == -1);
  CHECK(jacq::epsilon(0) == 2);
  for (long r = 0; r <= 30; ++r) {
    const CycloRational sum =
        CycloRational::omega_pow(r) + CycloRational::omega_pow(r).conj();
    CHECK(sum.is_rational());
    CHECK(sum.rational_part() == Rational(jacq::epsilon(r)));
  }
}

TEST_CASE("rational_part extraction") {
  CHECK(CycloRational(Rational(7, 3)).rational_part() == Rational(7, 3));
  CHECK(CycloRational(0).rational_part() == Rational(0));
  CHECK_THROWS_AS(CycloRational(Rational(1), Rational(1)).rational_part(),
                  jacq::NotRational);
}

TEST_CASE("ring axioms and norm positivity on sampled values") {
  std::mt19937 rng(23);
  for (int t = 0; t < 150; ++t) {
    const CycloRational x = rand_cyclo(rng), y = rand_cyclo(rng), z = rand_cyclo(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * CycloRational(1) == x);
    if (!x.is_zero()) {
      const Rational n = x.norm();
      CHECK(n.sign() > 0);
      CHECK((x * x.conj()).rational_part() == n);
      CHECK(x * x.inverse() == CycloRational(1));
    }
  }
}
