#include <utility>

#include "jacq/genfunc.hpp"

#include "jacq/errors.hpp"

namespace jacq {

SeriesNumerator numerator_from_initials(const RatQuaternion& q0,
                                        const RatQuaternion& q1,
                                        const RatQuaternion& q2) {
  return {q0, q1 - q0, q2 - q1 - q0};
}

SeriesNumerator jq_series_numerator() {
  return numerator_from_initials(jq_term(0), jq_term(1), jq_term(2));
}

SeriesNumerator jlq_series_numerator() {
  return numerator_from_initials(jlq_term(0), jlq_term(1), jlq_term(2));
}

SeriesStream::SeriesStream(SeriesNumerator numerator) : num_(std::move(numerator)) {}

RatQuaternion SeriesStream::next() {
  RatQuaternion c;
  if (n_ < 3) {
    // Long-division seed: c_n = num_n + c_{n-1} + c_{n-2} + 2 c_{n-3}.
    c = num_[static_cast<std::size_t>(n_)];
    if (n_ >= 1) c += window_[0];
    if (n_ >= 2) c += window_[1];
  } else {
    c = window_[0] + window_[1] + Rational(2) * window_[2];
  }
  window_ = {c, window_[0], window_[1]};
  ++n_;
  return c;
}

RatQuaternion series_coefficient(long n) {
  if (n < 0) {
    throw DomainError("series_coefficient: n must be >= 0");
  }
  SeriesStream stream(jq_series_numerator());
  RatQuaternion c;
  for (long i = 0; i <= n; ++i) c = stream.next();
  return c;
}

std::vector<RatQuaternion> numerator_from_stream(std::span<const RatQuaternion> coeffs) {
  std::vector<RatQuaternion> out(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    RatQuaternion d = coeffs[n];
    if (n >= 1) d -= coeffs[n - 1];
    if (n >= 2) d -= coeffs[n - 2];
    if (n >= 3) d -= Rational(2) * coeffs[n - 3];
    out[n] = d;
  }
  return out;
}

IdentityReport check_genfunc(long n) {
  IdentityReport rep = make_report("genfunc", series_coefficient(n), jq_term(n));
  rep.n = n;
  return rep;
}

}  // namespace jacq
