#pragma once

// Linear equations a x b = d, a x = d, x b = d over Cl(1,2).
//
// Vectorized, a x b = d reads L(a) R(b) vec(x) = vec(d), and the
// pseudoinverse of L(a) R(b) is L(a+) R(b+). Hence the equation is solvable
// iff a a+ d b+ b = d, and then every solution is
//   x = a+ d b+ + y - a+ a y b b+,   y arbitrary.
// The same formula covers invertible, singular and mixed coefficients.

#include <optional>
#include <vector>

#include "cl12/inverse.hpp"
#include "cl12/multivector.hpp"

namespace cl12 {

template <class S>
struct BasicAxbForms {
  BasicMultivector<S> a_pinv;
  BasicMultivector<S> b_pinv;
  BasicMultivector<S> particular;  // a+ d b+
  BasicMultivector<S> image;       // a a+ d b+ b, equal to d iff solvable
};

template <class S>
BasicAxbForms<S> axb_forms(const BasicMultivector<S>& a, const BasicMultivector<S>& b,
                           const BasicMultivector<S>& d, double tol = kDefaultTol) {
  BasicAxbForms<S> f{mp_inverse(a, tol).pinv, mp_inverse(b, tol).pinv, {}, {}};
  f.particular = f.a_pinv * d * f.b_pinv;
  f.image = a * f.particular * b;
  return f;
}

/// y - a+ a y b b+: projection onto the solution space of a x b = 0.
template <class S>
BasicMultivector<S> homogeneous_projection(const BasicAxbForms<S>& f, const BasicMultivector<S>& a,
                                           const BasicMultivector<S>& b, const BasicMultivector<S>& y) {
  return y - f.a_pinv * a * y * b * f.b_pinv;
}

struct SolutionSet {
  bool solvable = false;
  std::optional<Multivector> particular;  // set iff solvable
  std::vector<Multivector> hom_basis;     // orthonormal basis of the homogeneous solutions
  int dim = 0;
  // ||a x b - d|| for x = a+ d b+, which is the least-squares minimizer of
  // the vectorized system, so this is also the least-squares residual when
  // the equation has no solution.
  double residual = 0.0;
};

SolutionSet solve_axb(const Multivector& a, const Multivector& b, const Multivector& d,
                      double tol = kDefaultTol);
SolutionSet solve_ax(const Multivector& a, const Multivector& d, double tol = kDefaultTol);
SolutionSet solve_xb(const Multivector& b, const Multivector& d, double tol = kDefaultTol);

}  // namespace cl12
