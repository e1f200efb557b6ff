#include "jacq/generating_matrices.hpp"

#include "jacq/errors.hpp"
#include "jacq/sequences.hpp"

namespace jacq {

namespace {

Rational J(long n) { return seq_term(SeqKind::J3, n); }

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

Matrix<CycloRational> to_cyclo(const Matrix<Rational>& m) {
  return m.map([](const Rational& x) { return CycloRational(x); });
}

Matrix<RatQuaternion> to_quaternion(const Matrix<Rational>& m) {
  return m.map([](const Rational& x) { return RatQuaternion(x); });
}

}  // namespace

KAux kaux(long r, long n) {
  require(r >= 1, "kaux: r must be >= 1");
  const Rational p2r = Rational::pow2(r);
  return {r, n,
          -(p2r * Rational(epsilon(r)) + Rational(1)) * J(r * n) + p2r * J(r * (n - 1))};
}

Matrix<Rational> build_M() {
  return {{Rational(1), Rational(1), Rational(2)},
          {Rational(1), Rational(0), Rational(0)},
          {Rational(0), Rational(1), Rational(0)}};
}

Matrix<Rational> m_power_layout(long n) {
  Matrix<Rational> m(3, 3);
  for (long row = 0; row < 3; ++row) {
    const long t = n - row;  // top row carries the highest indices
    m(row, 0) = J(t + 1);
    m(row, 1) = J(t) + Rational(2) * J(t - 1);
    m(row, 2) = Rational(2) * J(t);
  }
  return m;
}

Rational fast_J3(long n, std::size_t* mul_count) {
  require(n >= 0, "fast_J3: n must be >= 0");
  return mat_power(build_M(), n, mul_count)(1, 0);
}

Matrix<Rational> build_Lr(long r) {
  require(r >= 1, "build_Lr: r must be >= 1");
  const Rational p2r = Rational::pow2(r);
  const Rational er{epsilon(r)};
  return {{p2r + er, -(p2r * er + Rational(1)), p2r},
          {Rational(1), Rational(0), Rational(0)},
          {Rational(0), Rational(1), Rational(0)}};
}

Matrix<Rational> build_Frn(long r, long n) {
  require(r >= 1 && n >= 1, "build_Frn: requires r >= 1 and n >= 1");
  const Rational p2r = Rational::pow2(r);
  Matrix<Rational> m(3, 3);
  for (long row = 0; row < 3; ++row) {
    const long t = n - row;  // rows step down one stride at a time
    m(row, 0) = J(r * (t + 1));
    m(row, 1) = kaux(r, t).value;
    m(row, 2) = p2r * J(r * t);
  }
  return m;
}

Matrix<Rational> build_Ar(long r) {
  require(r >= 1, "build_Ar: r must be >= 1");
  const Rational p2r = Rational::pow2(r);
  const Rational er{epsilon(r)};
  return {{Rational(1), Rational(0), Rational(0), Rational(0)},
          {Rational(1), p2r + er, -(p2r * er + Rational(1)), p2r},
          {Rational(0), Rational(1), Rational(0), Rational(0)},
          {Rational(0), Rational(0), Rational(1), Rational(0)}};
}

Matrix<Rational> build_Qrn(long r, long n) {
  require(r >= 1 && n >= 2, "build_Qrn: requires r >= 1 and n >= 2");
  const Rational p2r = Rational::pow2(r);
  Matrix<Rational> m(4, 4);
  m(0, 0) = J(r) + p2r * J(-r);
  m(0, 1) = m(0, 2) = m(0, 3) = Rational(0);
  for (long row = 1; row < 4; ++row) {
    const long t = n - (row - 1);
    m(row, 0) = sum_direct(r, t);
    m(row, 1) = J(r * (t + 1));
    m(row, 2) = kaux(r, t).value;
    m(row, 3) = p2r * J(r * t);
  }
  return m;
}

Matrix<CycloRational> build_Br(long r) {
  require(r >= 1, "build_Br: r must be >= 1");
  Matrix<CycloRational> m(4, 4);
  m(0, 0) = CycloRational(1);
  m(1, 1) = CycloRational(Rational::pow2(r));
  m(2, 2) = CycloRational::omega_pow(r);
  m(3, 3) = CycloRational::omega_pow(2 * r);
  return m;
}

Matrix<CycloRational> build_Hr(long r) {
  require(r >= 1, "build_Hr: r must be >= 1");
  const Rational denom = (Rational(epsilon(r)) - Rational(2)) * (Rational::pow2(r) - Rational(1));
  if (denom.is_zero()) {
    throw DegenerateModulus("build_Hr: (e_r - 2)(2^r - 1) = 0 for r = " + std::to_string(r));
  }
  const CycloRational h{Rational(1) / denom};
  Matrix<CycloRational> m(4, 4);
  m(0, 0) = CycloRational(1);
  m(0, 1) = m(0, 2) = m(0, 3) = CycloRational(0);
  // Vandermonde-style eigenvector columns in the eigenvalues 2^r, w^r, w^(2r).
  for (long row = 1; row < 4; ++row) {
    const long e = 3 - row;  // exponents 2, 1, 0 down the rows
    m(row, 0) = h;
    m(row, 1) = CycloRational(Rational::pow2(r * e));
    m(row, 2) = CycloRational::omega_pow(r * e);
    m(row, 3) = CycloRational::omega_pow(2 * r * e);
  }
  return m;
}

Matrix<RatQuaternion> build_Rquat() {
  Matrix<RatQuaternion> m(3, 3);
  for (long row = 0; row < 3; ++row) {
    const long t = 4 - row;
    m(row, 0) = jq_term(t);
    m(row, 1) = jq_term(t - 1) + Rational(2) * jq_term(t - 2);
    m(row, 2) = Rational(2) * jq_term(t - 1);
  }
  return m;
}

Matrix<RatQuaternion> rm_layout(long n) {
  Matrix<RatQuaternion> m(3, 3);
  for (long row = 0; row < 3; ++row) {
    const long t = n + 4 - row;
    m(row, 0) = jq_term(t);
    m(row, 1) = jq_term(t - 1) + Rational(2) * jq_term(t - 2);
    m(row, 2) = Rational(2) * jq_term(t - 1);
  }
  return m;
}

IdentityReport check_theorem_LF(long r, long n) {
  require(r >= 1 && n >= 1, "thmLF: requires r >= 1 and n >= 1");
  const Matrix<Rational> L = build_Lr(r);
  const Matrix<Rational> lhs =
      J(r) * mat_power(L, n) + (Rational::pow2(r) * J(-r)) * mat_power(L, n - 1);
  IdentityReport rep = make_report("thmLF", lhs, build_Frn(r, n));
  rep.n = n;
  rep.r = r;
  return rep;
}

IdentityReport check_theorem_AQ(long r, long n) {
  require(r >= 1 && n >= 2, "thmAQ: requires r >= 1 and n >= 2");
  const Matrix<Rational> A = build_Ar(r);
  const Matrix<Rational> lhs =
      J(r) * mat_power(A, n) + (Rational::pow2(r) * J(-r)) * mat_power(A, n - 1);
  IdentityReport rep = make_report("thmAQ", lhs, build_Qrn(r, n));
  rep.n = n;
  rep.r = r;
  return rep;
}

IdentityReport check_diagonalization(long r, long n) {
  require(r >= 1 && n >= 1, "diag: requires r >= 1 and n >= 1");
  const Matrix<CycloRational> H = build_Hr(r);  // throws on degenerate r
  const Matrix<CycloRational> An = mat_power(to_cyclo(build_Ar(r)), n);
  const Matrix<CycloRational> Bn = mat_power(build_Br(r), n);
  IdentityReport rep = make_report("diag", An * H, H * Bn);
  rep.n = n;
  rep.r = r;
  return rep;
}

IdentityReport check_theorem_RM(long n) {
  require(n >= 0, "thmRM: n must be >= 0");
  const Matrix<RatQuaternion> lhs = build_Rquat() * to_quaternion(mat_power(build_M(), n));
  IdentityReport rep = make_report("thmRM", lhs, rm_layout(n));
  rep.n = n;
  return rep;
}

IdentityReport check_corollary_conv(long n) {
  require(n >= 0, "corconv: n must be >= 0");
  const RatQuaternion rhs = jq_term(2) * J(n + 1) +
                            (jq_term(1) + Rational(2) * jq_term(0)) * J(n) +
                            (Rational(2) * jq_term(1)) * J(n - 1);
  IdentityReport rep = make_report("corconv", jq_term(n + 2), rhs);
  rep.n = n;
  return rep;
}

}  // namespace jacq
