#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

namespace jacq {

/// Small dense matrix over a ring R. R may be non-commutative (quaternion
/// entries): multiplication keeps left factors on the left throughout.
template <typename R>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<R>> rows)
      : rows_(rows.size()), cols_(rows.begin()->size()) {
    e_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw std::invalid_argument("Matrix: ragged initializer");
      }
      for (const auto& x : row) e_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  R& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const R& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  template <typename F>
  auto map(F&& f) const
      -> Matrix<std::decay_t<std::invoke_result_t<F&, const R&>>> {
    Matrix<std::decay_t<std::invoke_result_t<F&, const R&>>> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw std::invalid_argument("Matrix: shape mismatch in +");
    }
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] + b.e_[i];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("Matrix: shape mismatch in *");
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t c = 0; c < b.cols_; ++c) {
        R sum{};
        for (std::size_t k = 0; k < a.cols_; ++k) {
          sum += a(r, k) * b(k, c);
        }
        out(r, c) = std::move(sum);
      }
    }
    return out;
  }

  friend Matrix operator*(const R& c, const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) out.e_[i] = c * m.e_[i];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<R> e_;
};

/// m^n by repeated squaring: at most 2*floor(log2 n) ring-matrix products.
/// Counts every matrix product performed into *mul_count when given.
template <typename R>
Matrix<R> mat_power(const Matrix<R>& m, long n, std::size_t* mul_count = nullptr) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("mat_power: matrix not square");
  }
  if (n < 0) {
    throw std::domain_error("mat_power: negative exponent");
  }
  std::size_t count = 0;
  Matrix<R> base = m;
  Matrix<R> acc = Matrix<R>::identity(m.rows());
  bool acc_set = false;  // skip the initial multiply-by-identity
  auto e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1u) {
      if (acc_set) {
        acc = acc * base;
        ++count;
      } else {
        acc = base;
        acc_set = true;
      }
    }
    e >>= 1;
    if (e != 0) {
      base = base * base;
      ++count;
    }
  }
  if (mul_count) *mul_count = count;
  return acc;
}

/// "[[a, b], [c, d]]" with entries in their string form.
template <typename R>
std::string to_string(const Matrix<R>& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r == 0 ? "[" : ", [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) out += ", ";
      out += to_string(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace jacq
