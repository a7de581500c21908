#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gosslv {

// Dense matrix over any ring-like value type (Poly, Frac, BracketFrac,
// Laurent).  Construction requires an explicit zero element because values
// carry their field pointer.
template <class T>
class Matrix {
public:
  Matrix() : r_(0), c_(0) {}
  Matrix(std::size_t r, std::size_t c, const T& fill) : r_(r), c_(c), a_(r * c, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] + b.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] - b.a_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::logic_error("Matrix: shape mismatch");
    Matrix r(a.r_, b.c_, a.a_.empty() ? T() : a.a_[0] - a.a_[0]);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const T& x = a.at(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.c_; ++j) {
          if (b.at(k, j).is_zero()) continue;
          r.at(i, j) += x * b.at(k, j);
        }
      }
    return r;
  }

  std::vector<T> mul_vec(const std::vector<T>& x) const {
    if (x.size() != c_) throw std::logic_error("Matrix: vector length mismatch");
    std::vector<T> y;
    y.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) {
      T acc = a_[0] - a_[0];
      for (std::size_t j = 0; j < c_; ++j) {
        if (at(i, j).is_zero() || x[j].is_zero()) continue;
        acc += at(i, j) * x[j];
      }
      y.push_back(acc);
    }
    return y;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (std::size_t k = 0; k < a.a_.size(); ++k)
      if (!(a.a_[k] == b.a_[k])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  template <class Fn>
  auto map(Fn fn) const -> Matrix<decltype(fn(std::declval<const T&>()))> {
    using U = decltype(fn(std::declval<const T&>()));
    Matrix<U> m(r_, c_, fn(a_[0]));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m.at(i, j) = fn(at(i, j));
    return m;
  }

private:
  std::size_t r_, c_;
  std::vector<T> a_;
};

}  // namespace gosslv
