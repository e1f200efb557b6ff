#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jacq/rational.hpp"
#include "jacq/report.hpp"

namespace jacq {

/// J3/j3: third-order Jacobsthal and Jacobsthal-Lucas, defined for all
/// integer n (negative side by running the recurrence backwards, which
/// produces halves and quarters). J2/jL2: the classical second-order
/// sequences, n >= 0 only.
enum class SeqKind { J3, j3, J2, jL2 };

/// Oscillating parts of the closed forms, indexed by n mod 3:
/// J3_n = (2^(n+1) - u[n mod 3]) / 7 and j3_n = (2^(n+3) + v[n mod 3]) / 7.
struct ResidueConstants {
  static constexpr std::array<int, 3> u{2, -3, 1};
  static constexpr std::array<int, 3> v{6, -9, 3};
};

std::optional<SeqKind> seq_kind_from_name(std::string_view name);
std::string_view seq_kind_name(SeqKind kind);

/// Exact term by iterating the recurrence (linear space, O(|n|) ring ops).
/// Throws NegativeIndexUnsupported for J2/jL2 with n < 0.
Rational seq_term(SeqKind kind, long n);

/// Terms n, n+1, n+2, n+3 in one pass; the quaternion components.
std::array<Rational, 4> seq_term_window(SeqKind kind, long n);

/// Closed form (1/7)(2^(n+1) - a w^n - conj(a w^n)) evaluated exactly in
/// Q(w) with a = (5+4w)/3; the omega parts must cancel. n >= 0.
Rational binet_J3(long n);

/// Same with leading 2^(n+3)/7 and coefficient 5+4w. n >= 0.
Rational binet_j3(long n);

/// (2^(n+1) - u_{n mod 3})/7 for J3 with u in {2,-3,1};
/// (2^(n+3) + v_{n mod 3})/7 for j3 with v in {6,-9,3}. n >= 0.
Rational closed_form_residue(SeqKind kind, long n);

/// One r-strided step: given window = (J_{r(n-3)+s}, J_{r(n-2)+s},
/// J_{r(n-1)+s}) returns J_{rn+s} via
///   (2^r + e_r) w2 - (2^r e_r + 1) w1 + 2^r w0.
/// s only labels the window; the coefficients depend on r alone.
Rational rstep_next(long r, long s, const std::array<Rational, 3>& window);

/// S_{r,n} = sum of J3 at indices 0, r, 2r, ..., rn. Empty (zero) for n < 0.
Rational sum_direct(long r, long n);

/// S_{r,n} via the closed form with delta_r = (2 - e_r)(2^r - 1):
///   (J_{r(n+1)} - (2^r(e_r - 1) + 1) J_{rn} + 2^r J_{r(n-1)}
///    - (J_r + 2^r J_{-r})) / delta_r.
/// Throws DegenerateModulus when r = 0 (mod 3). Requires r, n >= 1.
Rational sum_closed(long r, long n);

/// Tags accepted by check_scalar_identity, in lexicographic order:
/// e10, e11, e12, e3..e9, e4, step2r.
const std::vector<std::string>& scalar_identity_tags();

/// Checks one scalar identity at index n (for "step2r" the index is r).
/// Throws UnknownIdentity for a bad tag, DomainError outside the domain.
IdentityReport check_scalar_identity(std::string_view id, long n);

/// Lemma check: rstep_next on a seq_term window reproduces J_{rn+s}.
/// Domain: r >= 1, 0 <= s < r, n >= 3.
IdentityReport check_lemma1(long r, long s, long n);

/// Sum-formula check: sum_closed(r, n) against sum_direct(r, n).
IdentityReport check_sum_formula(long r, long n);

}  // namespace jacq
