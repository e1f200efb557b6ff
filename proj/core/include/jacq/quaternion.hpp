#pragma once

#include <string>
#include <type_traits>
#include <utility>

namespace jacq {

/// Hamilton quaternion q0 + q1*i + q2*j + q3*k over a commutative
/// coefficient ring R. Basis rules: i^2 = j^2 = k^2 = -1, ij = -ji = k,
/// jk = -kj = i, ki = -ik = j. R must default-construct to its zero.
template <typename R>
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(R scalar) : s_(std::move(scalar)) {}
  Quaternion(R s, R i, R j, R k)
      : s_(std::move(s)), i_(std::move(i)), j_(std::move(j)), k_(std::move(k)) {}

  const R& s() const { return s_; }
  const R& i() const { return i_; }
  const R& j() const { return j_; }
  const R& k() const { return k_; }

  /// (q0, -q1, -q2, -q3). q * conjugate(q) is scalar with value norm().
  Quaternion conjugate() const { return {s_, -i_, -j_, -k_}; }

  /// q0^2 + q1^2 + q2^2 + q3^2.
  R norm() const { return s_ * s_ + i_ * i_ + j_ * j_ + k_ * k_; }

  bool is_zero() const {
    return *this == Quaternion{};
  }

  /// Componentwise map, e.g. extracting rational parts after a Binet
  /// evaluation in Q(w).
  template <typename F>
  auto map(F&& f) const
      -> Quaternion<std::decay_t<std::invoke_result_t<F&, const R&>>> {
    return {f(s_), f(i_), f(j_), f(k_)};
  }

  Quaternion& operator+=(const Quaternion& o) {
    s_ += o.s_; i_ += o.i_; j_ += o.j_; k_ += o.k_;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    s_ -= o.s_; i_ -= o.i_; j_ -= o.j_; k_ -= o.k_;
    return *this;
  }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) { return {-a.s_, -a.i_, -a.j_, -a.k_}; }

  /// Hamilton product; non-commutative, order is preserved.
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.s_ * b.s_ - a.i_ * b.i_ - a.j_ * b.j_ - a.k_ * b.k_,
            a.s_ * b.i_ + a.i_ * b.s_ + a.j_ * b.k_ - a.k_ * b.j_,
            a.s_ * b.j_ - a.i_ * b.k_ + a.j_ * b.s_ + a.k_ * b.i_,
            a.s_ * b.k_ + a.i_ * b.j_ - a.j_ * b.i_ + a.k_ * b.s_};
  }

  // Ring scalars centralize quaternions, so one-sided definitions suffice.
  friend Quaternion operator*(const R& c, const Quaternion& q) {
    return {c * q.s_, c * q.i_, c * q.j_, c * q.k_};
  }
  friend Quaternion operator*(const Quaternion& q, const R& c) { return c * q; }
  friend Quaternion operator/(const Quaternion& q, const R& c) {
    return {q.s_ / c, q.i_ / c, q.j_ / c, q.k_ / c};
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.s_ == b.s_ && a.i_ == b.i_ && a.j_ == b.j_ && a.k_ == b.k_;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

 private:
  R s_{};
  R i_{};
  R j_{};
  R k_{};
};

/// "(s, i, j, k)" with components in their string form.
template <typename R>
std::string to_string(const Quaternion<R>& q) {
  return "(" + to_string(q.s()) + ", " + to_string(q.i()) + ", " +
         to_string(q.j()) + ", " + to_string(q.k()) + ")";
}

}  // namespace jacq
