#include "cl12/oracle/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace cl12::oracle {

RationalMat RationalMat::identity(std::size_t n) {
  RationalMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMat RationalMat::transpose() const {
  RationalMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RationalMat::trace() const {
  Rational s = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

bool RationalMat::is_zero() const {
  for (const Rational& x : e_)
    if (sgn(x) != 0) return false;
  return true;
}

RationalMat operator+(const RationalMat& a, const RationalMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch in +");
  RationalMat c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
  return c;
}

RationalMat operator-(const RationalMat& a, const RationalMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch in -");
  RationalMat c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
  return c;
}

RationalMat operator*(const RationalMat& a, const RationalMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in *");
  RationalMat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RationalMat operator*(const Rational& s, const RationalMat& a) {
  RationalMat c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = s * a.e_[k];
  return c;
}

RationalVec operator*(const RationalMat& a, const RationalVec& x) {
  if (a.cols_ != x.size()) throw std::invalid_argument("shape mismatch in matrix-vector *");
  RationalVec y(a.rows_, Rational(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
  return y;
}

std::string RationalMat::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

Echelon row_reduce(const RationalMat& a) {
  RationalMat m = a;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;

  Rational prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));

    const Rational pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Rational factor = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) m(i, j) = (pivot * m(i, j) - factor * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }

  // Back substitution to reduced form.
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    const Rational pivot = m(k, c);
    for (std::size_t j = c; j < cols; ++j) m(k, j) /= pivot;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational factor = m(i, c);
      if (sgn(factor) == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RationalMat& a) { return row_reduce(a).pivots.size(); }

Rational determinant(const RationalMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  RationalMat m = a;
  const std::size_t n = m.rows();
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m(p, k)) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return n == 0 ? Rational(1) : Rational(sign * m(n - 1, n - 1));
}

RationalMat inverse(const RationalMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = row_reduce(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw std::domain_error("matrix is singular");
  RationalMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

bool satisfies_penrose(const RationalMat& a, const RationalMat& x) {
  if (x.rows() != a.cols() || x.cols() != a.rows()) return false;
  const RationalMat ax = a * x;
  const RationalMat xa = x * a;
  return ax * a == a && xa * x == x && ax.transpose() == ax && xa.transpose() == xa;
}

RationalMat exact_pinv(const RationalMat& a) {
  const Echelon e = row_reduce(a);
  const std::size_t r = e.pivots.size();
  if (r == 0) return RationalMat(a.cols(), a.rows());

  RationalMat f(a.rows(), r);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < r; ++k) f(i, k) = a(i, e.pivots[k]);
  RationalMat g(r, a.cols());
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < a.cols(); ++j) g(k, j) = e.reduced(k, j);

  const RationalMat ft = f.transpose();
  const RationalMat gt = g.transpose();
  const RationalMat x = gt * inverse(ft * a * gt) * ft;
  if (!satisfies_penrose(a, x)) throw std::logic_error("exact_pinv: Penrose equations failed");
  return x;
}

ExactSolution exact_solve(const RationalMat& a, const RationalVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("exact_solve: right-hand side size mismatch");
  const std::size_t n = a.cols();
  RationalMat aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const Echelon e = row_reduce(aug);

  ExactSolution out;
  out.consistent = e.pivots.empty() || e.pivots.back() != n;

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots)
    if (c < n) is_pivot[c] = true;

  if (out.consistent) {
    out.particular.assign(n, Rational(0));
    for (std::size_t k = 0; k < e.pivots.size(); ++k) out.particular[e.pivots[k]] = e.reduced(k, n);
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVec v(n, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
      if (e.pivots[k] < n) v[e.pivots[k]] = -e.reduced(k, free);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.coefficients.empty() || q.coefficients.empty()) return {};
  Polynomial r{std::vector<Rational>(p.coefficients.size() + q.coefficients.size() - 1, Rational(0))};
  for (std::size_t i = 0; i < p.coefficients.size(); ++i)
    for (std::size_t j = 0; j < q.coefficients.size(); ++j)
      r.coefficients[i + j] += p.coefficients[i] * q.coefficients[j];
  return r;
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    if (sgn(coefficients[k]) == 0) continue;
    os << (first ? "" : " + ") << "(" << coefficients[k] << ")";
    if (k > 0) os << " x^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CharPoly char_poly(const RationalMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMat m(n, n);
  const RationalMat id = RationalMat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
  }
  return {std::move(c)};
}

GaussianRational evaluate(const Polynomial& p, const GaussianRational& z) {
  GaussianRational acc{0, 0};
  for (std::size_t k = p.coefficients.size(); k-- > 0;) {
    const Rational re = acc.re * z.re - acc.im * z.im + p.coefficients[k];
    const Rational im = acc.re * z.im + acc.im * z.re;
    acc = {re, im};
  }
  return acc;
}

Polynomial poly_from_roots(const std::vector<GaussianRational>& roots, int multiplicity) {
  // Multiply (x - z) factors over the Gaussian rationals, then drop the
  // (necessarily zero) imaginary parts.
  std::vector<GaussianRational> acc{{1, 0}};
  for (int m = 0; m < multiplicity; ++m)
    for (const GaussianRational& z : roots) {
      std::vector<GaussianRational> next(acc.size() + 1, GaussianRational{0, 0});
      for (std::size_t k = 0; k < acc.size(); ++k) {
        next[k + 1].re += acc[k].re;
        next[k + 1].im += acc[k].im;
        next[k].re -= acc[k].re * z.re - acc[k].im * z.im;
        next[k].im -= acc[k].re * z.im + acc[k].im * z.re;
      }
      acc = std::move(next);
    }
  Polynomial p;
  for (const GaussianRational& g : acc) {
    if (sgn(g.im) != 0) throw std::invalid_argument("poly_from_roots: roots are not closed under conjugation");
    p.coefficients.push_back(g.re);
  }
  return p;
}

BladeProduct blade_product(int i, int j) {
  // Reorder i-blade followed by j-blade into canonical order: each generator
  // of j moves past the generators of i with a larger index.
  int swaps = 0;
  for (int g = 0; g < 3; ++g)
    if (j & (1 << g))
      for (int h = g + 1; h < 3; ++h)
        if (i & (1 << h)) ++swaps;
  int sign = (swaps % 2 == 0) ? 1 : -1;
  const int common = i & j;
  if (common & 0b010) sign = -sign;  // i2^2 = -1
  if (common & 0b100) sign = -sign;  // i3^2 = -1
  return {sign, i ^ j};
}

QMultivector generator_product(const QMultivector& a, const QMultivector& b) {
  QMultivector::Coeffs c;
  c.fill(Rational(0));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const BladeProduct p = blade_product(i, j);
      const Rational term = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
      if (p.sign > 0)
        c[static_cast<std::size_t>(p.index)] += term;
      else
        c[static_cast<std::size_t>(p.index)] -= term;
    }
  return QMultivector(c);
}

RationalMat generator_left_matrix(const QMultivector& a) {
  RationalMat m(8, 8);
  for (int t = 0; t < 8; ++t) {
    const QMultivector col = generator_product(a, QMultivector::e(t));
    for (std::size_t i = 0; i < 8; ++i) m(i, static_cast<std::size_t>(t)) = col[i];
  }
  return m;
}

RationalVec to_vec(const QMultivector& a) { return RationalVec(a.coeffs().begin(), a.coeffs().end()); }

QMultivector from_vec(const RationalVec& v) {
  if (v.size() != 8) throw std::invalid_argument("from_vec: need 8 entries");
  QMultivector::Coeffs c;
  for (std::size_t t = 0; t < 8; ++t) c[t] = v[t];
  return QMultivector(c);
}

}  // namespace cl12::oracle
