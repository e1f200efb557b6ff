#pragma once

#include <array>
#include <span>
#include <vector>

#include "jacq/jacobsthal_quaternions.hpp"
#include "jacq/report.hpp"

namespace jacq {

/// Numerator of a rational series with fixed denominator 1 - t - t^2 - 2t^3.
using SeriesNumerator = std::array<RatQuaternion, 3>;

/// [q0, q1 - q0, q2 - q1 - q0]: the numerator whose series starts with
/// coefficients q0, q1, q2 under the fixed denominator.
SeriesNumerator numerator_from_initials(const RatQuaternion& q0,
                                        const RatQuaternion& q1,
                                        const RatQuaternion& q2);

/// Numerator of sum JQ_n t^n: (i + j + 2k) + t(1 + j + 3k) + 2t^2(j + k).
SeriesNumerator jq_series_numerator();

/// Numerator of the analogous jQ series (derived from jQ_0..jQ_2).
SeriesNumerator jlq_series_numerator();

/// Coefficient stream of numerator / (1 - t - t^2 - 2t^3): the first three
/// values come from polynomial division, after which
/// c_n = c_{n-1} + c_{n-2} + 2 c_{n-3}.
class SeriesStream {
 public:
  explicit SeriesStream(SeriesNumerator numerator);

  /// Next coefficient, starting from c_0.
  RatQuaternion next();

 private:
  SeriesNumerator num_;
  std::array<RatQuaternion, 3> window_;  // last three coefficients
  long n_ = 0;
};

/// n-th coefficient of the JQ generating function; equals jq_term(n).
RatQuaternion series_coefficient(long n);

/// Multiplies a coefficient prefix back by the denominator:
/// d_n = c_n - c_{n-1} - c_{n-2} - 2 c_{n-3} (missing terms zero).
/// For a genuine series prefix this recovers the numerator exactly, with
/// zeros above degree 2.
std::vector<RatQuaternion> numerator_from_stream(std::span<const RatQuaternion> coeffs);

/// series_coefficient(n) against jq_term(n).
IdentityReport check_genfunc(long n);

}  // namespace jacq
