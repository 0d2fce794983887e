#pragma once

// Exact rational linear algebra used as an independent oracle for the
// closed forms of the library. Nothing here calls the library's closed
// forms: pseudoinverses come from a rank factorization, solvability from
// elimination, and characteristic polynomials from Faddeev-LeVerrier.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "cl12/matrix_rep.hpp"
#include "cl12/multivector.hpp"

// Found by argument-dependent lookup from the scalar-generic library code.
inline double to_double(const mpq_class& q) { return q.get_d(); }

namespace cl12::oracle {

using Rational = mpq_class;
using RationalVec = std::vector<Rational>;
using QMultivector = BasicMultivector<Rational>;

/// Dense m x n matrix of reduced rationals.
class RationalMat {
 public:
  RationalMat() = default;
  RationalMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

  static RationalMat identity(std::size_t n);

  template <class S, std::size_t R, std::size_t C>
  static RationalMat from(const Matrix<S, R, C>& m) {
    RationalMat out(R, C);
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) out(i, j) = Rational(m(i, j));
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  RationalMat transpose() const;
  Rational trace() const;
  bool is_zero() const;

  friend bool operator==(const RationalMat& a, const RationalMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const RationalMat& a, const RationalMat& b) { return !(a == b); }
  friend RationalMat operator+(const RationalMat& a, const RationalMat& b);
  friend RationalMat operator-(const RationalMat& a, const RationalMat& b);
  friend RationalMat operator*(const RationalMat& a, const RationalMat& b);
  friend RationalMat operator*(const Rational& s, const RationalMat& a);
  friend RationalVec operator*(const RationalMat& a, const RationalVec& x);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> e_;
};

struct Echelon {
  RationalMat reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot columns, ascending
};

/// Fraction-free (Bareiss) forward elimination followed by back
/// substitution. Pivot columns are chosen left to right, first nonzero row.
Echelon row_reduce(const RationalMat& a);

std::size_t rank(const RationalMat& a);

/// Bareiss determinant of a square matrix.
Rational determinant(const RationalMat& a);

/// Inverse of a nonsingular square matrix; throws std::domain_error otherwise.
RationalMat inverse(const RationalMat& a);

/// A X A = A, X A X = X, (A X)^T = A X, (X A)^T = X A.
bool satisfies_penrose(const RationalMat& a, const RationalMat& x);

/// Moore-Penrose inverse via A = F G, A+ = G^T (F^T A G^T)^-1 F^T. The four
/// Penrose equations are checked before returning (std::logic_error if not).
RationalMat exact_pinv(const RationalMat& a);

struct ExactSolution {
  bool consistent = false;
  RationalVec particular;             // free variables set to zero; empty if inconsistent
  std::vector<RationalVec> nullspace;  // basis of {x : A x = 0}
};

ExactSolution exact_solve(const RationalMat& a, const RationalVec& b);

/// Polynomial with coefficients[k] the coefficient of lambda^k.
struct Polynomial {
  std::vector<Rational> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  std::string to_string() const;
};

using CharPoly = Polynomial;

/// det(lambda I - A) by the Faddeev-LeVerrier recurrence. Monic.
CharPoly char_poly(const RationalMat& a);

struct GaussianRational {
  Rational re;
  Rational im;
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

GaussianRational evaluate(const Polynomial& p, const GaussianRational& z);

/// Monic polynomial whose roots are the given values with the given
/// multiplicity; requires the roots to come in conjugate pairs so that the
/// result is real.
Polynomial poly_from_roots(const std::vector<GaussianRational>& roots, int multiplicity);

/// e_i e_j from the generator relations i1^2 = 1, i2^2 = i3^2 = -1 and
/// anticommutation, reading basis index t as a bitmask over (i1, i2, i3).
/// Independent of the library's transcribed table.
struct BladeProduct {
  int sign;
  int index;
};
BladeProduct blade_product(int i, int j);

/// Multivector product computed with blade_product.
QMultivector generator_product(const QMultivector& a, const QMultivector& b);

/// Matrix of x -> a x built with generator_product.
RationalMat generator_left_matrix(const QMultivector& a);

RationalVec to_vec(const QMultivector& a);
QMultivector from_vec(const RationalVec& v);

}  // namespace cl12::oracle
