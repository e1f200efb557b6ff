#include "jacq/sequences.hpp"

#include <algorithm>

#include "jacq/cyclo.hpp"
#include "jacq/errors.hpp"

namespace jacq {

namespace {

int mod3(long n) { return static_cast<int>(((n % 3) + 3) % 3); }

struct Seeds {
  Rational a, b, c;  // terms 0, 1, 2
};

Seeds third_order_seeds(SeqKind kind) {
  if (kind == SeqKind::J3) return {Rational(0), Rational(1), Rational(1)};
  return {Rational(2), Rational(1), Rational(5)};
}

// Third-order terms m, m+1, m+2 for any integer m.
std::array<Rational, 3> third_order_triple(SeqKind kind, long m) {
  auto [a, b, c] = third_order_seeds(kind);
  if (m >= 0) {
    for (long i = 0; i < m; ++i) {
      Rational next = c + b + Rational(2) * a;
      a = b;
      b = c;
      c = next;
    }
  } else {
    // x_{n} = (x_{n+3} - x_{n+2} - x_{n+1}) / 2, stepping the window down.
    for (long i = 0; i > m; --i) {
      Rational prev = (c - b - a) / Rational(2);
      c = b;
      b = a;
      a = prev;
    }
  }
  return {a, b, c};
}

Rational second_order_term(SeqKind kind, long n) {
  if (n < 0) {
    throw NegativeIndexUnsupported(std::string(seq_kind_name(kind)) +
                                   ": index must be >= 0, got " + std::to_string(n));
  }
  Rational a = kind == SeqKind::J2 ? Rational(0) : Rational(2);
  Rational b(1);
  if (n == 0) return a;
  for (long i = 1; i < n; ++i) {
    Rational next = b + Rational(2) * a;
    a = b;
    b = next;
  }
  return b;
}

// Trace 2*p - q of a Binet summand x + conj(x) for x = p + q*w, left as a
// CycloRational so rational_part() can assert the cancellation.
CycloRational with_conjugate(const CycloRational& x) { return x + x.conj(); }

const CycloRational kBinetA{Rational(5, 3), Rational(4, 3)};  // 1 + (2/3) i sqrt3
const CycloRational kBinetALucas{Rational(5), Rational(4)};   // 3 + 2 i sqrt3

Rational binet_third_order(long n, bool lucas) {
  if (n < 0) {
    throw DomainError("binet: index must be >= 0, got " + std::to_string(n));
  }
  const CycloRational lead{Rational::pow2(n + (lucas ? 3 : 1))};
  const CycloRational osc =
      with_conjugate((lucas ? kBinetALucas : kBinetA) * CycloRational::omega_pow(n));
  const CycloRational value = (lucas ? lead + osc : lead - osc) / CycloRational(7);
  return value.rational_part();
}

}  // namespace

std::optional<SeqKind> seq_kind_from_name(std::string_view name) {
  if (name == "J3") return SeqKind::J3;
  if (name == "j3") return SeqKind::j3;
  if (name == "J2") return SeqKind::J2;
  if (name == "jL2") return SeqKind::jL2;
  return std::nullopt;
}

std::string_view seq_kind_name(SeqKind kind) {
  switch (kind) {
    case SeqKind::J3: return "J3";
    case SeqKind::j3: return "j3";
    case SeqKind::J2: return "J2";
    default: return "jL2";
  }
}

Rational seq_term(SeqKind kind, long n) {
  if (kind == SeqKind::J2 || kind == SeqKind::jL2) {
    return second_order_term(kind, n);
  }
  return third_order_triple(kind, n)[0];
}

std::array<Rational, 4> seq_term_window(SeqKind kind, long n) {
  if (kind == SeqKind::J2 || kind == SeqKind::jL2) {
    return {seq_term(kind, n), seq_term(kind, n + 1), seq_term(kind, n + 2),
            seq_term(kind, n + 3)};
  }
  auto [a, b, c] = third_order_triple(kind, n);
  Rational d = c + b + Rational(2) * a;
  return {a, b, c, d};
}

Rational binet_J3(long n) { return binet_third_order(n, false); }

Rational binet_j3(long n) { return binet_third_order(n, true); }

Rational closed_form_residue(SeqKind kind, long n) {
  if (kind != SeqKind::J3 && kind != SeqKind::j3) {
    throw DomainError("closed_form_residue: defined for J3 and j3 only");
  }
  if (n < 0) {
    throw DomainError("closed_form_residue: index must be >= 0");
  }
  if (kind == SeqKind::J3) {
    return (Rational::pow2(n + 1) - Rational(ResidueConstants::u[mod3(n)])) / Rational(7);
  }
  return (Rational::pow2(n + 3) + Rational(ResidueConstants::v[mod3(n)])) / Rational(7);
}

Rational rstep_next(long r, long s, const std::array<Rational, 3>& window) {
  if (r < 1) {
    throw DomainError("rstep_next: r must be >= 1");
  }
  (void)s;
  const Rational p2r = Rational::pow2(r);
  const Rational er{epsilon(r)};
  return (p2r + er) * window[2] - (p2r * er + Rational(1)) * window[1] + p2r * window[0];
}

Rational sum_direct(long r, long n) {
  if (r < 1) {
    throw DomainError("sum_direct: r must be >= 1");
  }
  Rational total(0);
  for (long k = 0; k <= n; ++k) {
    total += seq_term(SeqKind::J3, r * k);
  }
  return total;
}

Rational sum_closed(long r, long n) {
  if (r < 1 || n < 1) {
    throw DomainError("sum_closed: requires r >= 1 and n >= 1");
  }
  const Rational er{epsilon(r)};
  const Rational p2r = Rational::pow2(r);
  const Rational delta = (Rational(2) - er) * (p2r - Rational(1));
  if (delta.is_zero()) {
    throw DegenerateModulus("sum_closed: delta_r = 0 for r = " + std::to_string(r));
  }
  const Rational head = seq_term(SeqKind::J3, r * (n + 1)) -
                        (p2r * (er - Rational(1)) + Rational(1)) * seq_term(SeqKind::J3, r * n) +
                        p2r * seq_term(SeqKind::J3, r * (n - 1));
  const Rational tail = seq_term(SeqKind::J3, r) + p2r * seq_term(SeqKind::J3, -r);
  return (head - tail) / delta;
}

namespace {

Rational J(long n) { return seq_term(SeqKind::J3, n); }
Rational j(long n) { return seq_term(SeqKind::j3, n); }

void require_min(std::string_view id, long n, long min) {
  if (n < min) {
    throw DomainError(std::string(id) + ": index " + std::to_string(n) +
                      " below domain minimum " + std::to_string(min));
  }
}

}  // namespace

const std::vector<std::string>& scalar_identity_tags() {
  static const std::vector<std::string> tags = {
      "e10", "e11", "e12", "e3", "e4", "e5", "e6",
      "e7",  "e8",  "e9",  "step2r"};
  return tags;
}

IdentityReport check_scalar_identity(std::string_view id, long n) {
  IdentityReport rep;
  const Rational two(2), three(3), four(4), nine(9);

  if (id == "e3") {
    require_min(id, n, 0);
    rep = make_report("e3", three * J(n) + j(n), Rational::pow2(n + 1));
  } else if (id == "e4") {
    // Stated for n >= 2; the backward extension of j3 makes n in {0,1} valid.
    require_min(id, n, 0);
    const Rational branch = mod3(n) == 0 ? Rational(6) : Rational(-3);
    rep = make_report("e4", j(n) - four * j(n - 2), branch);
  } else if (id == "e5") {
    require_min(id, n, 0);
    rep = make_report("e5", j(n) - two * j(n - 3), three * J(n));
  } else if (id == "e6") {
    require_min(id, n, 0);
    static constexpr int branch[3] = {2, -3, 1};
    rep = make_report("e6", j(n) - four * J(n), Rational(branch[mod3(n)]));
  } else if (id == "e7") {
    require_min(id, n, 0);
    rep = make_report("e7", j(n + 1) + j(n), three * J(n + 2));
  } else if (id == "e8") {
    require_min(id, n, 0);
    static constexpr int branch[3] = {1, -1, 0};
    rep = make_report("e8", j(n) - J(n + 2), Rational(branch[mod3(n)]));
  } else if (id == "e9") {
    require_min(id, n, 0);
    const Rational jm = j(n - 3);
    rep = make_report("e9", jm * jm + three * J(n) * j(n), Rational::pow2(2 * n));
  } else if (id == "e10") {
    require_min(id, n, 0);
    const Rational rhs = mod3(n) != 0 ? J(n + 1) : J(n + 1) - Rational(1);
    rep = make_report("e10", sum_direct(1, n), rhs);
  } else if (id == "e11") {
    require_min(id, n, 0);
    Rational lhs(0);
    for (long k = 0; k <= n; ++k) lhs += j(k);
    const Rational rhs = mod3(n) != 0 ? j(n + 1) - two : j(n + 1) + Rational(1);
    rep = make_report("e11", lhs, rhs);
  } else if (id == "e12") {
    require_min(id, n, 0);
    rep = make_report("e12", j(n) * j(n) - nine * J(n) * J(n),
                      Rational::pow2(n + 2) * j(n - 3));
  } else if (id == "step2r") {
    // Index is r: J_{2r} = (2^r + e_r) J_r + 2^r J_{-r}.
    require_min(id, n, 1);
    const long r = n;
    const Rational p2r = Rational::pow2(r);
    rep = make_report("step2r", J(2 * r),
                      (p2r + Rational(epsilon(r))) * J(r) + p2r * J(-r));
    rep.r = r;
    return rep;
  } else {
    throw UnknownIdentity("check_scalar_identity: unknown tag '" + std::string(id) + "'");
  }

  rep.n = n;
  return rep;
}

IdentityReport check_lemma1(long r, long s, long n) {
  if (r < 1 || s < 0 || s >= r) {
    throw DomainError("lemma1: requires r >= 1 and 0 <= s < r");
  }
  if (n < 3) {
    throw DomainError("lemma1: stated for n >= 3");
  }
  const std::array<Rational, 3> window = {J(r * (n - 3) + s), J(r * (n - 2) + s),
                                          J(r * (n - 1) + s)};
  IdentityReport rep = make_report("lemma1", rstep_next(r, s, window), J(r * n + s));
  rep.n = n;
  rep.r = r;
  rep.s = s;
  return rep;
}

IdentityReport check_sum_formula(long r, long n) {
  IdentityReport rep = make_report("g5", sum_closed(r, n), sum_direct(r, n));
  rep.n = n;
  rep.r = r;
  return rep;
}

}  // namespace jacq
