#include "cl12/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace cl12 {

namespace {

using Column = std::array<double, 8>;

double dot(const Column& x, const Column& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < 8; ++i) s += x[i] * y[i];
  return s;
}

// Gram-Schmidt with column pivoting: at each step take the remaining column
// of largest norm, stop once it falls below the drop tolerance.
std::vector<Multivector> orthonormal_basis(std::vector<Column> cols, double drop_rel) {
  double largest = 0.0;
  for (const Column& c : cols) largest = std::max(largest, std::sqrt(dot(c, c)));
  const double drop = drop_rel * std::max(1.0, largest);

  std::vector<Multivector> basis;
  while (!cols.empty()) {
    auto best = std::max_element(cols.begin(), cols.end(),
                                 [](const Column& x, const Column& y) { return dot(x, x) < dot(y, y); });
    const double norm = std::sqrt(dot(*best, *best));
    if (norm <= drop) break;

    Column q = *best;
    for (double& x : q) x /= norm;
    cols.erase(best);
    for (Column& c : cols) {
      const double r = dot(q, c);
      for (std::size_t i = 0; i < 8; ++i) c[i] -= r * q[i];
    }
    basis.emplace_back(q);
  }
  return basis;
}

}  // namespace

SolutionSet solve_axb(const Multivector& a, const Multivector& b, const Multivector& d, double tol) {
  const BasicAxbForms<double> f = axb_forms(a, b, d, tol);

  SolutionSet out;
  out.residual = norm2(f.image - d);
  out.solvable = out.residual <= tol * (1.0 + norm2(d));
  if (out.solvable) out.particular = f.particular;

  std::vector<Column> images;
  for (int t = 0; t < 8; ++t) images.push_back(homogeneous_projection(f, a, b, Multivector::e(t)).coeffs());
  out.hom_basis = orthonormal_basis(std::move(images), tol);
  out.dim = static_cast<int>(out.hom_basis.size());
  return out;
}

SolutionSet solve_ax(const Multivector& a, const Multivector& d, double tol) {
  return solve_axb(a, Multivector::scalar(1.0), d, tol);
}

SolutionSet solve_xb(const Multivector& b, const Multivector& d, double tol) {
  return solve_axb(Multivector::scalar(1.0), b, d, tol);
}

}  // namespace cl12
