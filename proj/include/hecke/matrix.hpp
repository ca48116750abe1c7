#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hecke/ratfunc.hpp"

namespace hecke {

/// Dense matrix over a ring T. Products skip zero entries, which matters for
/// the seminormal matrices (at most two nonzeros per column).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static Matrix identity(int n) { return scalar(n, T(1)); }
  static Matrix scalar(int n, const T& c) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = c;
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(int(d.size()), int(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  bool is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (i != j && !is_zero_entry((*this)(i, j))) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    check(a.cols_ == b.rows_);
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero_entry(x)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (!is_zero_entry(y)) r(i, j) += x * y;
        }
      }
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    check(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!is_zero_entry(b.a_[i])) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    check(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!is_zero_entry(b.a_[i])) a.a_[i] -= b.a_[i];
    return a;
  }
  friend Matrix operator*(const T& c, Matrix a) {
    for (auto& x : a.a_)
      if (!is_zero_entry(x)) x = c * x;
    return a;
  }
  Matrix operator-() const { return T(-1) * *this; }

  /// first (row, col) where a and b differ, or nothing
  friend std::optional<std::pair<int, int>> first_difference(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return std::pair{-1, -1};
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j)
        if (!(a(i, j) == b(i, j))) return std::pair{i, j};
    return std::nullopt;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return !first_difference(a, b); }

 private:
  static bool is_zero_entry(const T& x) {
    if constexpr (requires { x.is_zero(); })
      return x.is_zero();
    else
      return x == 0;
  }
  static void check(bool ok) {
    if (!ok) throw std::invalid_argument("matrix shapes do not match");
  }

  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using SymMatrix = Matrix<RatFunc>;
using QMatrix = Matrix<Rational>;

}  // namespace hecke
