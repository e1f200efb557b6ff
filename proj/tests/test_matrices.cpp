#include <doctest.h>

#include "jacq/errors.hpp"
#include "jacq/generating_matrices.hpp"
#include "jacq/matrix.hpp"
#include "jacq/sequences.hpp"

using jacq::Matrix;
using jacq::Rational;
using jacq::SeqKind;

namespace {

Rational J(long n) { return jacq::seq_term(SeqKind::J3, n); }

// Characteristic polynomial x^3 + c2 x^2 + c1 x + c0 of a 3x3 matrix by
// the trace method (Faddeev-LeVerrier), independent of any solver.
struct CharPoly3 {
  Rational c2, c1, c0;
};

CharPoly3 charpoly3(const Matrix<Rational>& m) {
  auto trace = [](const Matrix<Rational>& a) {
    return a(0, 0) + a(1, 1) + a(2, 2);
  };
  const Rational t1 = trace(m);
  const Rational t2 = trace(m * m);
  const Rational t3 = trace(m * m * m);
  const Rational c2 = -t1;
  const Rational c1 = (t1 * t1 - t2) / Rational(2);
  const Rational c0 =
      -(t1 * t1 * t1 - Rational(3) * t1 * t2 + Rational(2) * t3) / Rational(6);
  return {c2, c1, c0};
}

Rational det3(const Matrix<Rational>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace

TEST_CASE("mat_power basics") {
  const auto M = jacq::build_M();
  CHECK(jacq::mat_power(M, 0) == Matrix<Rational>::identity(3));
  CHECK(jacq::mat_power(M, 2) ==
        Matrix<Rational>{{Rational(2), Rational(3), Rational(2)},
                         {Rational(1), Rational(1), Rational(2)},
                         {Rational(1), Rational(0), Rational(0)}});
  CHECK(jacq::mat_power(M, 10)(0, 0) == Rational(585));  // J_11
  CHECK_THROWS(jacq::mat_power(M, -1));
}

TEST_CASE("squaring equals the naive product chain") {
  const auto M = jacq::build_M();
  auto naive = Matrix<Rational>::identity(3);
  for (long n = 0; n <= 32; ++n) {
    CHECK(jacq::mat_power(M, n) == naive);
    naive = naive * M;
  }
}

TEST_CASE("multiplication count stays within 2 ceil(log2 n)") {
  const auto M = jacq::build_M();
  for (long n : {2L, 3L, 7L, 8L, 100L, 1000L, 65536L, 100000L}) {
    std::size_t count = 0;
    jacq::mat_power(M, n, &count);
    long ceil_log2 = 0;
    while ((1L << ceil_log2) < n) ++ceil_log2;
    CHECK(count <= static_cast<std::size_t>(2 * ceil_log2));
  }
}

TEST_CASE("powers of M carry the sequence in every entry") {
  for (long n = 0; n <= 64; ++n) {
    CHECK(jacq::mat_power(jacq::build_M(), n) == jacq::m_power_layout(n));
  }
}

TEST_CASE("fast evaluation via matrix powers") {
  CHECK(jacq::fast_J3(10) == Rational(293));
  CHECK(jacq::fast_J3(0) == Rational(0));
  CHECK(jacq::fast_J3(100) == J(100));
  CHECK_THROWS_AS(jacq::fast_J3(-1), jacq::DomainError);
}

TEST_CASE("M has determinant 2 and char poly x^3 - x^2 - x - 2") {
  const auto M = jacq::build_M();
  CHECK(det3(M) == Rational(2));
  const auto cp = charpoly3(M);
  CHECK(cp.c2 == Rational(-1));
  CHECK(cp.c1 == Rational(-1));
  CHECK(cp.c0 == Rational(-2));
  // Cayley-Hamilton as a cross-check
  const auto M2 = M * M;
  const auto M3 = M2 * M;
  const auto lhs = M3 + Rational(-1) * M2 + Rational(-1) * M;
  CHECK(lhs == Rational(2) * Matrix<Rational>::identity(3));
}

TEST_CASE("strided companion matrices reproduce F_{r,n}") {
  CHECK(jacq::build_Lr(1) == jacq::build_M());
  CHECK(jacq::build_Frn(1, 1) == jacq::build_M());

  CHECK(jacq::check_theorem_LF(1, 1).pass);
  CHECK(jacq::check_theorem_LF(2, 3).pass);
  CHECK(jacq::check_theorem_LF(4, 2).pass);
  for (long r = 1; r <= 8; ++r) {
    for (long n = 1; n <= 20; ++n) {
      CAPTURE(r);
      CAPTURE(n);
      CHECK(jacq::check_theorem_LF(r, n).pass);
    }
  }
  CHECK_THROWS_AS(jacq::check_theorem_LF(0, 1), jacq::DomainError);
}

TEST_CASE("bordered sum matrices reproduce Q_{r,n}") {
  const auto rep = jacq::check_theorem_AQ(1, 2);
  CHECK(rep.pass);
  CHECK(jacq::build_Qrn(1, 2)(1, 0) == Rational(2));  // S_{1,2}
  CHECK(jacq::build_Qrn(2, 2)(1, 0) == Rational(6));  // S_{2,2}
  CHECK(jacq::check_theorem_AQ(2, 2).pass);
  CHECK(jacq::check_theorem_AQ(5, 3).pass);
  for (long r = 1; r <= 8; ++r) {
    for (long n = 2; n <= 20; ++n) {
      CAPTURE(r);
      CAPTURE(n);
      CHECK(jacq::check_theorem_AQ(r, n).pass);
    }
  }
  CHECK_THROWS_AS(jacq::check_theorem_AQ(1, 1), jacq::DomainError);
}

TEST_CASE("diagonalization A_r^n H_r = H_r B_r^n over Q(w)") {
  CHECK(jacq::check_diagonalization(1, 2).pass);
  CHECK(jacq::check_diagonalization(2, 3).pass);
  CHECK_THROWS_AS(jacq::check_diagonalization(3, 1), jacq::DegenerateModulus);
  CHECK_THROWS_AS(jacq::build_Hr(6), jacq::DegenerateModulus);
  for (long r : {1L, 2L, 4L, 5L, 7L, 8L}) {
    for (long n = 1; n <= 12; ++n) {
      CAPTURE(r);
      CAPTURE(n);
      CHECK(jacq::check_diagonalization(r, n).pass);
    }
  }
}

TEST_CASE("quaternion matrix times M^n shifts the layout") {
  const auto R = jacq::build_Rquat();
  CHECK(R(0, 0) == jacq::jq_term(4));
  CHECK(jacq::rm_layout(0) == R);
  CHECK(jacq::rm_layout(1)(0, 0) == jacq::jq_term(5));
  CHECK(jacq::check_theorem_RM(0).pass);
  CHECK(jacq::check_theorem_RM(1).pass);
  CHECK(jacq::check_theorem_RM(6).pass);
  for (long n = 0; n <= 100; ++n) {
    CAPTURE(n);
    CHECK(jacq::check_theorem_RM(n).pass);
  }
}

TEST_CASE("convolution corollary") {
  CHECK(jacq::check_corollary_conv(0).pass);
  CHECK(jacq::check_corollary_conv(1).pass);
  CHECK(jacq::check_corollary_conv(7).pass);
  for (long n = 0; n <= 100; ++n) {
    CAPTURE(n);
    CHECK(jacq::check_corollary_conv(n).pass);
  }
}

TEST_CASE("K auxiliary entries satisfy their defining combination") {
  for (long r = 1; r <= 6; ++r) {
    for (long n = -2; n <= 10; ++n) {
      const Rational expect = -(Rational::pow2(r) * Rational(jacq::epsilon(r)) + Rational(1)) *
                                  J(r * n) +
                              Rational::pow2(r) * J(r * (n - 1));
      CHECK(jacq::kaux(r, n).value == expect);
    }
  }
}
