#include "jacq/jacobsthal_quaternions.hpp"

#include <array>

#include "jacq/errors.hpp"
#include "jacq/sequences.hpp"

namespace jacq {

namespace {

int mod3(long n) { return static_cast<int>(((n % 3) + 3) % 3); }

RatQuaternion term_from_window(SeqKind kind, long n) {
  if (n < 0) {
    throw DomainError("quaternion term: index must be >= 0, got " + std::to_string(n));
  }
  const auto w = seq_term_window(kind, n);
  return {w[0], w[1], w[2], w[3]};
}

const CycloRational kA{Rational(5, 3), Rational(4, 3)};   // 1 + (2/3) i sqrt3
const CycloRational kALucas{Rational(5), Rational(4)};    // 3 + 2 i sqrt3

RatQuaternion extract_rational(const CycloQuaternion& q) {
  return q.map([](const CycloRational& c) { return c.rational_part(); });
}

RatQuaternion quat_binet(long n, bool lucas) {
  if (n < 0) {
    throw DomainError("quaternion Binet: index must be >= 0");
  }
  const BinetTriple& bt = binet_constants();
  const CycloRational lead{Rational::pow2(n + (lucas ? 3 : 1))};
  const CycloRational c1 = (lucas ? kALucas : kA) * CycloRational::omega_pow(n);
  const CycloRational c2 = c1.conj();  // conj(a) w^(2n) since conj is multiplicative
  const CycloQuaternion osc = c1 * bt.beta + c2 * bt.gamma;
  const CycloQuaternion sum = lucas ? lead * bt.alpha + osc : lead * bt.alpha - osc;
  return extract_rational(sum / CycloRational(7));
}

}  // namespace

RatQuaternion jq_term(long n) { return term_from_window(SeqKind::J3, n); }

RatQuaternion jlq_term(long n) { return term_from_window(SeqKind::j3, n); }

const BinetTriple& binet_constants() {
  static const BinetTriple bt = {
      {CycloRational(1), CycloRational(2), CycloRational(4), CycloRational(8)},
      {CycloRational(1), CycloRational::omega(), CycloRational::omega_pow(2),
       CycloRational(1)},
      {CycloRational(1), CycloRational::omega_pow(2), CycloRational::omega(),
       CycloRational(1)}};
  return bt;
}

RatQuaternion jq_binet(long n) { return quat_binet(n, false); }

RatQuaternion jlq_binet(long n) { return quat_binet(n, true); }

RatQuaternion quat_sum(long n) {
  if (n < 0) {
    throw DomainError("quat_sum: index must be >= 0");
  }
  // One pass over j_0 .. j_{n+3} instead of n window evaluations.
  std::array<Rational, 4> acc{};
  std::array<Rational, 4> win = seq_term_window(SeqKind::j3, 0);
  for (long t = 0;; ++t) {
    for (int c = 0; c < 4; ++c) acc[c] += win[c];
    if (t == n) break;
    const Rational next = win[3] + win[2] + Rational(2) * win[1];
    win = {win[1], win[2], win[3], next};
  }
  return {acc[0], acc[1], acc[2], acc[3]};
}

const std::vector<std::string>& quat_identity_tags() {
  static const std::vector<std::string> tags = {
      "hsum", "lemma-e4-lift", "norm", "product", "t2", "t5a", "t5b", "t6"};
  return tags;
}

IdentityReport check_quat_identity(std::string_view id, long n) {
  IdentityReport rep;
  const Rational three(3), four(4);

  if (id == "t2") {
    if (n < 0) throw DomainError("t2: n must be >= 0");
    rep = make_report("t2", three * jq_term(n) + jlq_term(n),
                      Rational::pow2(n + 1) *
                          RatQuaternion{Rational(1), Rational(2), Rational(4), Rational(8)});
  } else if (id == "lemma-e4-lift") {
    if (n < 2) throw DomainError("lemma-e4-lift: stated for n >= 2");
    static const std::array<RatQuaternion, 3> branch = {
        RatQuaternion{Rational(2), Rational(-1), Rational(-1), Rational(2)},
        RatQuaternion{Rational(-1), Rational(-1), Rational(2), Rational(-1)},
        RatQuaternion{Rational(-1), Rational(2), Rational(-1), Rational(-1)}};
    rep = make_report("lemma-e4-lift", (jlq_term(n) - four * jlq_term(n - 2)) / three,
                      branch[mod3(n)]);
  } else if (id == "t5a") {
    if (n < 0) throw DomainError("t5a: n must be >= 0");
    static const std::array<RatQuaternion, 3> branch = {
        RatQuaternion{Rational(2), Rational(-3), Rational(1), Rational(2)},
        RatQuaternion{Rational(-3), Rational(1), Rational(2), Rational(-3)},
        RatQuaternion{Rational(1), Rational(2), Rational(-3), Rational(1)}};
    rep = make_report("t5a", jlq_term(n) - four * jq_term(n), branch[mod3(n)]);
  } else if (id == "t5b") {
    if (n < 0) throw DomainError("t5b: n must be >= 0");
    rep = make_report("t5b", jlq_term(n + 1) + jlq_term(n), three * jq_term(n + 2));
  } else if (id == "t6") {
    if (n < 0) throw DomainError("t6: n must be >= 0");
    static const std::array<RatQuaternion, 3> branch = {
        RatQuaternion{Rational(1), Rational(-1), Rational(0), Rational(1)},
        RatQuaternion{Rational(-1), Rational(0), Rational(1), Rational(-1)},
        RatQuaternion{Rational(0), Rational(1), Rational(-1), Rational(0)}};
    rep = make_report("t6", jlq_term(n) - jq_term(n + 2), branch[mod3(n)]);
  } else if (id == "norm") {
    if (n < 0) throw DomainError("norm: n must be >= 0");
    const Rational p2n = Rational::pow2(n);
    const Rational p4n = Rational::pow2(2 * n);
    const Rational c340(340);
    Rational rhs;
    switch (mod3(n)) {
      case 0: rhs = c340 * p4n - Rational(64) * p2n + Rational(18); break;
      case 1: rhs = c340 * p4n + Rational(68) * p2n + Rational(23); break;
      default: rhs = c340 * p4n - Rational(4) * p2n + Rational(15); break;
    }
    rep = make_report("norm", Rational(49) * jq_term(n).norm(), rhs);
  } else if (id == "hsum") {
    if (n < 0) throw DomainError("hsum: n must be >= 0");
    static const std::array<RatQuaternion, 3> branch = {
        RatQuaternion{Rational(1), Rational(-4), Rational(-5), Rational(-7)},
        RatQuaternion{Rational(-2), Rational(-4), Rational(-2), Rational(-10)},
        RatQuaternion{Rational(-2), Rational(-1), Rational(-5), Rational(-10)}};
    rep = make_report("hsum", quat_sum(n), jlq_term(n + 1) + branch[mod3(n)]);
  } else if (id == "product") {
    if (n < 1 || mod3(n) != 0) {
      throw DomainError("product: stated for n >= 1 with n = 0 (mod 3)");
    }
    const Rational p2n = Rational::pow2(n);
    const Rational p4n = Rational::pow2(2 * n);
    const RatQuaternion rhs{
        Rational(24) * p2n - Rational(1328) * p4n + Rational(30),
        Rational(64) * p4n - Rational(2) * p2n + Rational(36),
        Rational::pow2(2 * n + 7) - Rational(205) * Rational::pow2(n + 1) - Rational(12),
        Rational(5) * Rational::pow2(n + 5) + Rational::pow2(2 * n + 8) - Rational(24)};
    rep = make_report("product", Rational(49) * (jq_term(n) * jlq_term(n)), rhs);
  } else {
    throw UnknownIdentity("check_quat_identity: unknown tag '" + std::string(id) + "'");
  }

  rep.n = n;
  return rep;
}

}  // namespace jacq
