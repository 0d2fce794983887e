#pragma once

// Real 8x8 representation of Cl(1,2): vec(a x) = L(a) vec(x) and
// vec(x a) = R(a) vec(x).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>

#include "cl12/multivector.hpp"

namespace cl12 {

/// Dense fixed-size row-major matrix.
template <class S, std::size_t Rows, std::size_t Cols>
class Matrix {
 public:
  using value_type = S;
  static constexpr std::size_t rows = Rows;
  static constexpr std::size_t cols = Cols;

  Matrix() { m_.fill(S(0)); }

  static Matrix identity() {
    static_assert(Rows == Cols, "identity of a non-square matrix");
    Matrix m;
    for (std::size_t i = 0; i < Rows; ++i) m(i, i) = S(1);
    return m;
  }

  static Matrix diagonal(const std::array<S, Rows>& d) {
    static_assert(Rows == Cols, "diagonal of a non-square matrix");
    Matrix m;
    for (std::size_t i = 0; i < Rows; ++i) m(i, i) = d[i];
    return m;
  }

  S& operator()(std::size_t i, std::size_t j) { return m_[i * Cols + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return m_[i * Cols + j]; }

  Matrix<S, Cols, Rows> transpose() const {
    Matrix<S, Cols, Rows> t;
    for (std::size_t i = 0; i < Rows; ++i)
      for (std::size_t j = 0; j < Cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.m_ == b.m_; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c;
    for (std::size_t k = 0; k < Rows * Cols; ++k) c.m_[k] = a.m_[k] + b.m_[k];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c;
    for (std::size_t k = 0; k < Rows * Cols; ++k) c.m_[k] = a.m_[k] - b.m_[k];
    return c;
  }

  friend Matrix operator*(const S& s, const Matrix& a) {
    Matrix c;
    for (std::size_t k = 0; k < Rows * Cols; ++k) c.m_[k] = s * a.m_[k];
    return c;
  }

  template <std::size_t Inner>
  friend Matrix<S, Rows, Inner> operator*(const Matrix& a, const Matrix<S, Cols, Inner>& b) {
    Matrix<S, Rows, Inner> c;
    for (std::size_t i = 0; i < Rows; ++i)
      for (std::size_t k = 0; k < Cols; ++k) {
        if (a(i, k) == S(0)) continue;
        for (std::size_t j = 0; j < Inner; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

 private:
  std::array<S, Rows * Cols> m_;
};

template <class S>
using BasicMat8 = Matrix<S, 8, 8>;
template <class S>
using BasicVec8 = Matrix<S, 8, 1>;

using Mat8 = BasicMat8<double>;
using Vec8 = BasicVec8<double>;

template <class S>
BasicVec8<S> vectorize(const BasicMultivector<S>& a) {
  BasicVec8<S> v;
  for (std::size_t t = 0; t < 8; ++t) v(t, 0) = a[t];
  return v;
}

template <class S>
BasicMultivector<S> devectorize(const BasicVec8<S>& v) {
  typename BasicMultivector<S>::Coeffs c;
  for (std::size_t t = 0; t < 8; ++t) c[t] = v(t, 0);
  return BasicMultivector<S>(c);
}

/// Column t is vec(a e_t).
template <class S>
BasicMat8<S> left_matrix(const BasicMultivector<S>& a) {
  BasicMat8<S> m;
  for (std::size_t t = 0; t < 8; ++t) {
    const BasicMultivector<S> col = a * BasicMultivector<S>::e(static_cast<int>(t));
    for (std::size_t i = 0; i < 8; ++i) m(i, t) = col[i];
  }
  return m;
}

/// Column t is vec(e_t a). Equals K8 L(a)^T K8.
template <class S>
BasicMat8<S> right_matrix(const BasicMultivector<S>& a) {
  BasicMat8<S> m;
  for (std::size_t t = 0; t < 8; ++t) {
    const BasicMultivector<S> col = BasicMultivector<S>::e(static_cast<int>(t)) * a;
    for (std::size_t i = 0; i < 8; ++i) m(i, t) = col[i];
  }
  return m;
}

/// K8 = diag(1, 1, -1, 1, -1, 1, -1, -1).
template <class S>
BasicMat8<S> k8() {
  return BasicMat8<S>::diagonal({S(1), S(1), S(-1), S(1), S(-1), S(1), S(-1), S(-1)});
}

/// S8 = diag(1, -1, 1, -1, 1, -1, 1, -1).
template <class S>
BasicMat8<S> s8() {
  return BasicMat8<S>::diagonal({S(1), S(-1), S(1), S(-1), S(1), S(-1), S(1), S(-1)});
}

/// Determinant by LU decomposition with partial pivoting.
template <std::size_t N>
double determinant(Matrix<double, N, N> m) {
  double det = 1.0;
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < N; ++i)
      if (std::abs(m(i, k)) > std::abs(m(pivot, k))) pivot = i;
    if (m(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t j = 0; j < N; ++j) std::swap(m(k, j), m(pivot, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < N; ++i) {
      const double f = m(i, k) / m(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < N; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

/// The four closed-form eigenvalues of L(a); each has algebraic
/// multiplicity 2 in the characteristic polynomial of the 8x8 matrix.
/// Coincident roots are listed separately, not merged.
struct EigenSpectrum {
  static constexpr int multiplicity = 2;
  std::array<std::complex<double>, 4> values;
};

/// Roots of lambda^2 - 2 lambda (a0 +- a7 i) + N(a) +- 2 T(a) i, sorted by
/// (real, imag).
EigenSpectrum eigenvalues(const Multivector& a);

}  // namespace cl12
