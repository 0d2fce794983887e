#pragma once

// Multivectors of the Clifford algebra Cl(1,2) over the basis
//   e0 = 1, e1 = i1, e2 = i2, e3 = i1 i2, e4 = i3, e5 = i1 i3, e6 = i2 i3, e7 = i1 i2 i3
// with i1^2 = 1, i2^2 = i3^2 = -1 and anticommuting generators.
//
// The scalar type is a template parameter. The library works in double;
// instantiating with an exact rational type gives an exact mirror of every
// closed form in this header (used by the verification suites).

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace cl12 {

inline constexpr double kDefaultTol = 1e-9;

inline double to_double(double x) { return x; }

/// Index t of a basis element e_t.
class BasisIndex {
 public:
  constexpr explicit BasisIndex(int t) : t_(t) {
    if (t < 0 || t > 7) throw std::out_of_range("basis index must be in 0..7");
  }
  constexpr int value() const { return t_; }

 private:
  int t_;
};

namespace detail {

struct TableEntry {
  std::int8_t sign;
  std::uint8_t index;
};

// kProductTable[i][j] is e_i * e_j as (sign, index). Rows 1..7 and columns
// 1..7 are the algebra's multiplication table; row and column 0 are the
// identity. Checked against the generator relations in the tests.
inline constexpr std::array<std::array<TableEntry, 8>, 8> kProductTable{{
    {{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}}},
    {{{1, 1}, {1, 0}, {1, 3}, {1, 2}, {1, 5}, {1, 4}, {1, 7}, {1, 6}}},
    {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}, {1, 6}, {-1, 7}, {-1, 4}, {1, 5}}},
    {{{1, 3}, {-1, 2}, {-1, 1}, {1, 0}, {1, 7}, {-1, 6}, {-1, 5}, {1, 4}}},
    {{{1, 4}, {-1, 5}, {-1, 6}, {1, 7}, {-1, 0}, {1, 1}, {1, 2}, {-1, 3}}},
    {{{1, 5}, {-1, 4}, {-1, 7}, {1, 6}, {-1, 1}, {1, 0}, {1, 3}, {-1, 2}}},
    {{{1, 6}, {1, 7}, {1, 4}, {1, 5}, {-1, 2}, {-1, 3}, {-1, 0}, {-1, 1}}},
    {{{1, 7}, {1, 6}, {1, 5}, {1, 4}, {-1, 3}, {-1, 2}, {-1, 1}, {-1, 0}}},
}};

}  // namespace detail

template <class Scalar>
class BasicMultivector {
 public:
  using value_type = Scalar;
  using Coeffs = std::array<Scalar, 8>;

  BasicMultivector() { c_.fill(Scalar(0)); }

  explicit BasicMultivector(const Coeffs& c) : c_(c) {
    if constexpr (std::is_floating_point_v<Scalar>) {
      for (const Scalar& x : c_)
        if (!std::isfinite(x)) throw std::invalid_argument("multivector coefficients must be finite");
    }
  }

  static BasicMultivector scalar(const Scalar& s) {
    Coeffs c;
    c.fill(Scalar(0));
    c[0] = s;
    return BasicMultivector(c);
  }

  static BasicMultivector basis(BasisIndex t, const Scalar& coeff = Scalar(1)) {
    Coeffs c;
    c.fill(Scalar(0));
    c[static_cast<std::size_t>(t.value())] = coeff;
    return BasicMultivector(c);
  }

  static BasicMultivector e(int t) { return basis(BasisIndex(t)); }

  const Scalar& operator[](std::size_t t) const { return c_[t]; }
  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const {
    for (const Scalar& x : c_)
      if (x != Scalar(0)) return false;
    return true;
  }

  template <class Other>
  BasicMultivector<Other> cast() const {
    typename BasicMultivector<Other>::Coeffs out;
    for (std::size_t t = 0; t < 8; ++t) {
      if constexpr (std::is_floating_point_v<Other>)
        out[t] = static_cast<Other>(to_double(c_[t]));
      else
        out[t] = Other(c_[t]);
    }
    return BasicMultivector<Other>(out);
  }

  friend bool operator==(const BasicMultivector& a, const BasicMultivector& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BasicMultivector& a, const BasicMultivector& b) { return !(a == b); }

  friend BasicMultivector operator+(const BasicMultivector& a, const BasicMultivector& b) {
    Coeffs c;
    for (std::size_t t = 0; t < 8; ++t) c[t] = a.c_[t] + b.c_[t];
    return BasicMultivector(c);
  }

  friend BasicMultivector operator-(const BasicMultivector& a, const BasicMultivector& b) {
    Coeffs c;
    for (std::size_t t = 0; t < 8; ++t) c[t] = a.c_[t] - b.c_[t];
    return BasicMultivector(c);
  }

  friend BasicMultivector operator-(const BasicMultivector& a) {
    Coeffs c;
    for (std::size_t t = 0; t < 8; ++t) c[t] = -a.c_[t];
    return BasicMultivector(c);
  }

  friend BasicMultivector operator*(const Scalar& s, const BasicMultivector& a) {
    Coeffs c;
    for (std::size_t t = 0; t < 8; ++t) c[t] = s * a.c_[t];
    return BasicMultivector(c);
  }

  friend BasicMultivector operator*(const BasicMultivector& a, const Scalar& s) { return s * a; }

  friend BasicMultivector operator/(const BasicMultivector& a, const Scalar& s) {
    Coeffs c;
    for (std::size_t t = 0; t < 8; ++t) c[t] = a.c_[t] / s;
    return BasicMultivector(c);
  }

  friend BasicMultivector operator*(const BasicMultivector& a, const BasicMultivector& b) {
    Coeffs c;
    c.fill(Scalar(0));
    for (std::size_t i = 0; i < 8; ++i) {
      if (a.c_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < 8; ++j) {
        const detail::TableEntry& e = detail::kProductTable[i][j];
        if (e.sign > 0)
          c[e.index] += a.c_[i] * b.c_[j];
        else
          c[e.index] -= a.c_[i] * b.c_[j];
      }
    }
    return BasicMultivector(c);
  }

 private:
  Coeffs c_;
};

using Multivector = BasicMultivector<double>;

template <class S>
BasicMultivector<S> mul(const BasicMultivector<S>& a, const BasicMultivector<S>& b) {
  return a * b;
}

template <class S>
BasicMultivector<S> add(const BasicMultivector<S>& a, const BasicMultivector<S>& b) {
  return a + b;
}

template <class S>
BasicMultivector<S> scale(const S& lambda, const BasicMultivector<S>& a) {
  return lambda * a;
}

/// Negates e1..e6, keeps e0 and e7.
template <class S>
BasicMultivector<S> conjugate(const BasicMultivector<S>& a) {
  typename BasicMultivector<S>::Coeffs c = a.coeffs();
  for (std::size_t t = 1; t <= 6; ++t) c[t] = -c[t];
  return BasicMultivector<S>(c);
}

/// Negates e2, e4, e6, e7. Reverses products and maps L(a) to its transpose.
template <class S>
BasicMultivector<S> prime(const BasicMultivector<S>& a) {
  typename BasicMultivector<S>::Coeffs c = a.coeffs();
  for (std::size_t t : {2u, 4u, 6u, 7u}) c[t] = -c[t];
  return BasicMultivector<S>(c);
}

/// Central real part a0 + a7 e7.
template <class S>
BasicMultivector<S> cre(const BasicMultivector<S>& a) {
  typename BasicMultivector<S>::Coeffs c;
  c.fill(S(0));
  c[0] = a[0];
  c[7] = a[7];
  return BasicMultivector<S>(c);
}

template <class S>
BasicMultivector<S> cim(const BasicMultivector<S>& a) {
  typename BasicMultivector<S>::Coeffs c = a.coeffs();
  c[0] = S(0);
  c[7] = S(0);
  return BasicMultivector<S>(c);
}

template <class S>
struct BasicFunctionals {
  S N;
  S T;
  S P;  // N^2 + 4 T^2; zero exactly on the non-invertible elements
  S T1;
  S T3;
  S T5;
  S K;  // a0^2 + a2^2 + a4^2 + a6^2

  friend bool operator==(const BasicFunctionals&, const BasicFunctionals&) = default;
};

using Functionals = BasicFunctionals<double>;

template <class S>
S functional_N(const BasicMultivector<S>& a) {
  S n = a[0] * a[0];
  n -= a[1] * a[1];
  n += a[2] * a[2];
  n -= a[3] * a[3];
  n += a[4] * a[4];
  n -= a[5] * a[5];
  n += a[6] * a[6];
  n -= a[7] * a[7];
  return n;
}

template <class S>
S functional_T(const BasicMultivector<S>& a) {
  S t = a[0] * a[7];
  t += a[2] * a[5];
  t -= a[1] * a[6];
  t -= a[3] * a[4];
  return t;
}

template <class S>
S functional_P(const BasicMultivector<S>& a) {
  const S n = functional_N(a);
  const S t = functional_T(a);
  S p = n * n;
  p += S(4) * t * t;
  return p;
}

template <class S>
BasicFunctionals<S> functionals(const BasicMultivector<S>& a) {
  BasicFunctionals<S> f;
  f.N = functional_N(a);
  f.T = functional_T(a);
  f.P = f.N * f.N;
  f.P += S(4) * f.T * f.T;

  f.T1 = a[0] * a[1];
  f.T1 -= a[2] * a[3];
  f.T1 -= a[4] * a[5];
  f.T1 += a[6] * a[7];

  f.T3 = a[0] * a[3];
  f.T3 += a[1] * a[2];
  f.T3 += a[4] * a[7];
  f.T3 += a[5] * a[6];

  f.T5 = a[0] * a[5];
  f.T5 += a[1] * a[4];
  f.T5 -= a[2] * a[7];
  f.T5 -= a[3] * a[6];

  f.K = a[0] * a[0];
  f.K += a[2] * a[2];
  f.K += a[4] * a[4];
  f.K += a[6] * a[6];
  return f;
}

/// Sum of squared coefficients.
template <class S>
S norm2_squared(const BasicMultivector<S>& a) {
  S s(0);
  for (std::size_t t = 0; t < 8; ++t) s += a[t] * a[t];
  return s;
}

inline double norm2(const Multivector& a) { return std::sqrt(norm2_squared(a)); }

/// a = a_h + a_H e4 with a_h, a_H in span{e0, e1, e2, e3}.
template <class S>
std::pair<BasicMultivector<S>, BasicMultivector<S>> split_h(const BasicMultivector<S>& a) {
  typename BasicMultivector<S>::Coeffs h, hh;
  h.fill(S(0));
  hh.fill(S(0));
  for (std::size_t t = 0; t < 4; ++t) {
    h[t] = a[t];
    hh[t] = a[t + 4];
  }
  return {BasicMultivector<S>(h), BasicMultivector<S>(hh)};
}

/// True iff |c_t| <= tol for t = 1..6. Exact scalars ignore tol.
template <class S>
bool is_central(const BasicMultivector<S>& a, double tol = kDefaultTol) {
  for (std::size_t t = 1; t <= 6; ++t) {
    if constexpr (std::is_floating_point_v<S>) {
      if (std::abs(a[t]) > tol) return false;
    } else {
      if (a[t] != S(0)) return false;
    }
  }
  return true;
}

/// |P(a)| <= tol * ||a||^4. P is homogeneous of degree 4, so the test is
/// scale invariant. Exact scalars test P(a) == 0.
template <class S>
bool is_singular(const BasicMultivector<S>& a, double tol = kDefaultTol) {
  if constexpr (std::is_floating_point_v<S>) {
    const double n2 = norm2_squared(a);
    return std::abs(functional_P(a)) <= tol * n2 * n2;
  } else {
    return functional_P(a) == S(0);
  }
}

}  // namespace cl12
