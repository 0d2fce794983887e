#pragma once

// Classical and Moore-Penrose inverses of Cl(1,2) elements.
//
// The Moore-Penrose inverse of a is the unique x with
//   a x a = a,   x a x = x,   (a x)' = a x,   (x a)' = x a,
// where ' is the prime involution (it plays the role of the transpose
// under the left representation). In closed form
//   a+ = 0                                    if a = 0
//   a+ = (N(a) - 2 T(a) e7) conj(a) / P(a)   if P(a) != 0
//   a+ = prime(a) / (4 K(a))                 otherwise,
// with K(a) = a0^2 + a2^2 + a4^2 + a6^2, which is half the squared norm of
// any nonzero singular element and therefore positive there.

#include <stdexcept>
#include <string>

#include "cl12/multivector.hpp"

namespace cl12 {

/// Raised when an operation needs a^-1 but P(a) = 0.
class SingularElement : public std::domain_error {
 public:
  explicit SingularElement(const std::string& what = "element is singular (P(a) = 0)")
      : std::domain_error(what) {}
};

namespace detail {

[[noreturn]] inline void invariant_failure(const char* what) {
  throw std::logic_error(std::string("internal invariant violated: ") + what);
}

}  // namespace detail

/// The inverse via (N - 2 T e7) conj(a) / P without a singularity check.
template <class S>
BasicMultivector<S> inverse_unchecked(const BasicMultivector<S>& a) {
  const BasicFunctionals<S> f = functionals(a);
  typename BasicMultivector<S>::Coeffs c;
  c.fill(S(0));
  c[0] = f.N;
  c[7] = S(-2) * f.T;
  const BasicMultivector<S> num = BasicMultivector<S>(c) * conjugate(a);
  return num / f.P;
}

/// Two-sided inverse. Throws SingularElement when is_singular(a, tol).
template <class S>
BasicMultivector<S> inverse(const BasicMultivector<S>& a, double tol = kDefaultTol) {
  if (is_singular(a, tol)) throw SingularElement();
  return inverse_unchecked(a);
}

enum class PinvKind { Zero, Invertible, SingularNonzero };

template <class S>
struct BasicMPResult {
  BasicMultivector<S> pinv;
  PinvKind kind;
  // |P(a)| / ||a||^4 (0 for a = 0). Small values on the Invertible branch
  // mean a is close to the singular set, where a -> a+ is discontinuous.
  double condition;
};

using MPResult = BasicMPResult<double>;

template <class S>
BasicMPResult<S> mp_inverse(const BasicMultivector<S>& a, double tol = kDefaultTol) {
  if (a.is_zero()) return {BasicMultivector<S>(), PinvKind::Zero, 0.0};

  const BasicFunctionals<S> f = functionals(a);
  const double n2 = to_double(norm2_squared(a));
  const double condition = std::abs(to_double(f.P)) / (n2 * n2);

  if (!is_singular(a, tol)) return {inverse_unchecked(a), PinvKind::Invertible, condition};

  if (!(f.K > S(0))) detail::invariant_failure("K(a) > 0 for nonzero singular a");
  S denom = S(4) * f.K;
  return {prime(a) / denom, PinvKind::SingularNonzero, condition};
}

}  // namespace cl12
