#include "doctest.h"

#include <cmath>

#include "cl12/inverse.hpp"
#include "cl12/matrix_rep.hpp"
#include "cl12/oracle/rational.hpp"
#include "cl12/solver.hpp"
#include "cl12/verify/generators.hpp"

using namespace cl12;
using oracle::QMultivector;
using oracle::Rational;
using oracle::RationalMat;

namespace {

Multivector mv(std::initializer_list<std::pair<int, double>> terms) {
  Multivector::Coeffs c{};
  for (const auto& [t, v] : terms) c[static_cast<std::size_t>(t)] += v;
  return Multivector(c);
}

void check_close(const Multivector& x, const Multivector& y, double tol = 1e-12) {
  for (std::size_t t = 0; t < 8; ++t) CHECK(std::abs(x[t] - y[t]) <= tol);
}

// Rank of L(a) R(b), the matrix of x -> a x b.
int exact_rank(const Multivector& a, const Multivector& b) {
  return static_cast<int>(oracle::rank(RationalMat::from(left_matrix(a) * right_matrix(b))));
}

}  // namespace

TEST_CASE("two-sided equation with a singular left and right coefficient") {
  const Multivector a = mv({{0, 1}, {1, 1}}), b = mv({{6, 1}, {7, 1}}), d = mv({{0, 1}, {1, 1}, {6, 1}, {7, 1}});
  const SolutionSet s = solve_axb(a, b, d);
  REQUIRE(s.solvable);
  check_close(*s.particular, mv({{0, 0.25}, {1, 0.25}, {6, -0.25}, {7, -0.25}}));
  CHECK(s.dim == 8 - exact_rank(a, b));
  CHECK(s.dim == static_cast<int>(s.hom_basis.size()));
  CHECK(s.residual <= 1e-12);

  // Homogeneous family y - (1+e1) y (1+e1) / 4.
  const auto f = axb_forms(a, b, d);
  const Multivector y = mv({{0, 0.3}, {2, -1.7}, {5, 2.0}, {7, 0.9}});
  check_close(homogeneous_projection(f, a, b, y), y - a * y * a / 4.0);
  for (const Multivector& h : s.hom_basis) CHECK(norm2(a * h * b) <= 1e-12);
}

TEST_CASE("one-sided equations") {
  const SolutionSet ax = solve_ax(mv({{1, 1}, {2, 1}}), mv({{1, 1}, {2, 1}, {5, 1}, {6, 1}}));
  REQUIRE(ax.solvable);
  check_close(*ax.particular, mv({{0, 0.5}, {3, 0.5}, {4, 0.5}, {7, 0.5}}));
  CHECK(ax.dim == 4);

  const SolutionSet xb = solve_xb(mv({{6, 1}, {7, 1}}), mv({{2, 1}, {3, -1}, {4, 1}, {5, -1}}));
  REQUIRE(xb.solvable);
  check_close(*xb.particular, mv({{2, -0.5}, {3, 0.5}, {4, 0.5}, {5, -0.5}}));
  CHECK(xb.dim == 4);

  const SolutionSet ident = solve_xb(Multivector::e(0), Multivector::e(5));
  REQUIRE(ident.solvable);
  check_close(*ident.particular, Multivector::e(5));
  CHECK(ident.dim == 0);
  CHECK(ident.hom_basis.empty());

  const Multivector d = mv({{0, 2}, {3, -1}, {6, 4}});
  const SolutionSet trivial = solve_axb(Multivector::e(0), Multivector::e(0), d);
  REQUIRE(trivial.solvable);
  check_close(*trivial.particular, d);
  CHECK(trivial.dim == 0);
}

TEST_CASE("unsolvable equations") {
  const Multivector a = mv({{1, 1}, {2, 1}});
  const SolutionSet s1 = solve_axb(a, Multivector::e(0), Multivector::e(0));
  CHECK_FALSE(s1.solvable);
  CHECK_FALSE(s1.particular.has_value());
  CHECK(s1.residual > 0.1);

  // a a+ = (1 - e3)/2, so a a+ d differs from d = 1.
  check_close(a * mp_inverse(a).pinv, mv({{0, 0.5}, {3, -0.5}}));

  CHECK_FALSE(solve_ax(a, Multivector::e(0)).solvable);
  CHECK_FALSE(solve_xb(mv({{6, 1}, {7, 1}}), Multivector::e(0)).solvable);

  // Confirm with the exact rank test on the augmented vectorized system.
  const RationalMat m = RationalMat::from(left_matrix(QMultivector::e(1) + QMultivector::e(2)));
  CHECK_FALSE(oracle::exact_solve(m, oracle::to_vec(QMultivector::scalar(1))).consistent);
}

TEST_CASE("solver agrees with the exact vectorized system") {
  verify::Rng rng = verify::trial_rng(11, 100, 0);
  for (int k = 0; k < 60; ++k) {
    const QMultivector a = k % 2 ? verify::forced_singular(rng) : verify::random_int_mv(rng);
    const QMultivector b = (k / 2) % 2 ? verify::forced_singular(rng) : verify::random_int_mv(rng);
    const QMultivector d = k % 3 ? a * verify::random_int_mv(rng) * b : verify::random_int_mv(rng);
    const RationalMat m = RationalMat::from(left_matrix(a) * right_matrix(b));
    const auto exact = oracle::exact_solve(m, oracle::to_vec(d));

    const Multivector af = a.cast<double>(), bf = b.cast<double>(), df = d.cast<double>();
    const SolutionSet s = solve_axb(af, bf, df);
    CHECK(s.solvable == exact.consistent);
    CHECK(s.dim == static_cast<int>(exact.nullspace.size()));
    if (s.particular) CHECK(norm2(af * *s.particular * bf - df) <= 1e-9 * (1.0 + norm2(df)));
    for (const Multivector& h : s.hom_basis) {
      CHECK(norm2(h) == doctest::Approx(1.0));
      CHECK(norm2(af * h * bf) <= 1e-9);
    }
  }
}
