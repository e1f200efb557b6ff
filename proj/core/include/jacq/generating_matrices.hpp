#pragma once

#include "jacq/cyclo.hpp"
#include "jacq/jacobsthal_quaternions.hpp"
#include "jacq/matrix.hpp"
#include "jacq/rational.hpp"
#include "jacq/report.hpp"

namespace jacq {

/// K_{r,n} = -(2^r e_r + 1) J_{rn} + 2^r J_{r(n-1)}, the middle-column
/// entry of F_{r,n} and Q_{r,n}.
struct KAux {
  long r;
  long n;
  Rational value;
};

KAux kaux(long r, long n);

/// Generating matrix M = [[1,1,2],[1,0,0],[0,1,0]]; M^n carries the J3
/// terms in every entry (with J_{-1} = 0, J_{-2} = 1/2, J_{-3} = -1/4
/// making M^0 the identity).
Matrix<Rational> build_M();

/// The expected layout of M^n, built from seq_term values.
Matrix<Rational> m_power_layout(long n);

/// J3 term read off mat_power(M, n): O(log n) 3x3 multiplications.
/// mul_count, when given, receives the number of matrix products used.
Rational fast_J3(long n, std::size_t* mul_count = nullptr);

/// L_r: companion matrix of the r-strided recurrence.
Matrix<Rational> build_Lr(long r);

/// F_{r,n}: strided-term matrix with K_{r,.} middle column. n >= 1.
Matrix<Rational> build_Frn(long r, long n);

/// A_r: L_r bordered with the eigenvalue-1 row/column used for sums.
Matrix<Rational> build_Ar(long r);

/// Q_{r,n}: F_{r,n} bordered with partial sums S_{r,n-2..n}. n >= 2.
Matrix<Rational> build_Qrn(long r, long n);

/// B_r = diag(1, 2^r, w^r, w^(2r)).
Matrix<CycloRational> build_Br(long r);

/// Eigenvector matrix H_r with first-column entries
/// 1/((e_r - 2)(2^r - 1)); throws DegenerateModulus when r = 0 (mod 3).
Matrix<CycloRational> build_Hr(long r);

/// Quaternion-entry matrix R with JQ_2..JQ_4 in the M^n layout.
Matrix<RatQuaternion> build_Rquat();

/// The expected layout of R * M^n (entries JQ_{n+1}..JQ_{n+4}).
Matrix<RatQuaternion> rm_layout(long n);

/// J_r L_r^n + 2^r J_{-r} L_r^(n-1) = F_{r,n}; r >= 1, n >= 1.
IdentityReport check_theorem_LF(long r, long n);

/// J_r A_r^n + 2^r J_{-r} A_r^(n-1) = Q_{r,n}; r >= 1, n >= 2.
IdentityReport check_theorem_AQ(long r, long n);

/// A_r^n H_r = H_r B_r^n over Q(w); r >= 1 with r != 0 (mod 3), n >= 1.
IdentityReport check_diagonalization(long r, long n);

/// R * M^n matches the shifted-JQ layout; n >= 0.
IdentityReport check_theorem_RM(long n);

/// JQ_{n+2} = JQ_2 J_{n+1} + (JQ_1 + 2 JQ_0) J_n + 2 JQ_1 J_{n-1}; n >= 0.
IdentityReport check_corollary_conv(long n);

}  // namespace jacq
