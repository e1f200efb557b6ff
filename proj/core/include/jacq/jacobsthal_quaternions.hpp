#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jacq/cyclo.hpp"
#include "jacq/quaternion.hpp"
#include "jacq/rational.hpp"
#include "jacq/report.hpp"

namespace jacq {

using RatQuaternion = Quaternion<Rational>;
using CycloQuaternion = Quaternion<CycloRational>;

/// JQ_n = J_n + J_{n+1} i + J_{n+2} j + J_{n+3} k, n >= 0.
RatQuaternion jq_term(long n);

/// jQ_n = j_n + j_{n+1} i + j_{n+2} j + j_{n+3} k, n >= 0.
RatQuaternion jlq_term(long n);

/// Binet constants: alpha = 1 + 2i + 4j + 8k, beta = 1 + w i + w^2 j + k,
/// gamma the componentwise conjugate of beta.
struct BinetTriple {
  CycloQuaternion alpha;
  CycloQuaternion beta;
  CycloQuaternion gamma;
};

const BinetTriple& binet_constants();

/// (1/7)(2^(n+1) alpha - a w^n beta - conj(a) w^(2n) gamma) with
/// a = (5+4w)/3, evaluated in Q(w); every component must come out
/// rational or the evaluation is buggy. Equals jq_term(n).
RatQuaternion jq_binet(long n);

/// (1/7)(2^(n+3) alpha + (5+4w) w^n beta + (1-4w) w^(2n) gamma).
RatQuaternion jlq_binet(long n);

/// Direct sum of jQ_0 .. jQ_n.
RatQuaternion quat_sum(long n);

/// Tags accepted by check_quat_identity, in lexicographic order:
/// hsum, lemma-e4-lift, norm, product, t2, t5a, t5b, t6.
const std::vector<std::string>& quat_identity_tags();

/// Checks one quaternion theorem at index n. Branch constants are kept
/// verbatim so transcription slips show up as failures. Throws
/// UnknownIdentity for a bad tag and DomainError outside the theorem's
/// stated domain (lemma-e4-lift: n >= 2; product: n >= 1 and n = 0 mod 3;
/// the rest: n >= 0).
IdentityReport check_quat_identity(std::string_view id, long n);

}  // namespace jacq
