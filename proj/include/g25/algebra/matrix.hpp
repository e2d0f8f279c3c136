#pragma once

#include "g25/algebra/scalar.hpp"

#include <string>
#include <vector>

namespace g25 {

// Small dense row-major matrix over any scalar kind.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T{}) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows * cols), fill) {}

  static Matrix identity(int n, const T& one, const T& zero) {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * c_ + j)]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * c_ + j)]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw argument_error("matrix shape mismatch in product");
    Matrix out(x.r_, y.c_, x.a_.empty() ? T{} : x.a_[0] * 0);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        if (is_exact_zero(x(i, k))) continue;
        for (int j = 0; j < y.c_; ++j) out(i, j) = out(i, j) + x(i, k) * y(k, j);
      }
    return out;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw argument_error("matrix shape mismatch in sum");
    Matrix out = x;
    for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = out.a_[i] + y.a_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw argument_error("matrix shape mismatch in difference");
    Matrix out = x;
    for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = out.a_[i] - y.a_[i];
    return out;
  }
  friend Matrix operator*(const Matrix& x, const T& s) {
    Matrix out = x;
    for (auto& v : out.a_) v = v * s;
    return out;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) { return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_; }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix transpose() const {
    Matrix out(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }
  Matrix adjoint() const {
    Matrix out(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out(j, i) = conj((*this)(i, j));
    return out;
  }

  std::vector<T> column(int j) const {
    std::vector<T> v;
    for (int i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  std::vector<T> apply(const std::vector<T>& x) const {
    if (static_cast<int>(x.size()) != c_) throw argument_error("matrix-vector shape mismatch");
    std::vector<T> y;
    for (int i = 0; i < r_; ++i) {
      T acc = x.empty() ? T{} : x[0] * 0;
      for (int j = 0; j < c_; ++j) acc = acc + (*this)(i, j) * x[j];
      y.push_back(acc);
    }
    return y;
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<T>()));
    Matrix<U> out(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

// Rank over an exact field by Gaussian elimination.
template <class T>
int exact_rank(Matrix<T> m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (!is_exact_zero(m(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(piv, j));
    const T inv = one_like(m(rank, col)) / m(rank, col);
    for (int i = rank + 1; i < m.rows(); ++i) {
      if (is_exact_zero(m(i, col))) continue;
      const T f = m(i, col) * inv;
      for (int j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

// Projective equality of two vectors: x ~ y up to a nonzero scalar, exactly.
template <class T>
bool projectively_equal(const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() != y.size()) return false;
  int k = -1;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_exact_zero(x[i])) {
      k = static_cast<int>(i);
      break;
    }
  if (k < 0 || is_exact_zero(y[k])) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] * y[k] != y[i] * x[k]) return false;
  return true;
}

}  // namespace g25
