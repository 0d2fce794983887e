#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "cl12/matrix_rep.hpp"
#include "cl12/oracle/rational.hpp"
#include "cl12/verify/generators.hpp"
#include "cl12/verify/transcription.hpp"

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

const Multivector ex21 = mv({{0, 1}, {1, -1}, {2, 1}, {3, 1}, {7, -1}});

}  // namespace

TEST_CASE("vectorize and devectorize") {
  const Vec8 v = vectorize(Multivector::e(3));
  for (std::size_t i = 0; i < 8; ++i) CHECK(v(i, 0) == (i == 3 ? 1.0 : 0.0));
  const Vec8 w = vectorize(ex21);
  const double expect[8] = {1, -1, 1, 1, 0, 0, 0, -1};
  for (std::size_t i = 0; i < 8; ++i) CHECK(w(i, 0) == expect[i]);
  CHECK(devectorize(w) == ex21);
}

TEST_CASE("left matrix examples") {
  CHECK(left_matrix(Multivector::e(0)) == Mat8::identity());
  CHECK(right_matrix(Multivector::e(0)) == Mat8::identity());

  // First column of L(a) is vec(a).
  const Mat8 l = left_matrix(ex21);
  for (std::size_t i = 0; i < 8; ++i) CHECK(l(i, 0) == vectorize(ex21)(i, 0));
  CHECK(l == verify::transcribed_left_matrix(ex21));

  // L(e7) = ((0, -M), (M, 0)) with M the 4x4 anti-diagonal ones matrix.
  const Mat8 l7 = left_matrix(Multivector::e(7));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      double want = 0.0;
      if (i < 4 && j >= 4 && i + (j - 4) == 3) want = -1.0;
      if (i >= 4 && j < 4 && (i - 4) + j == 3) want = 1.0;
      CHECK(l7(i, j) == want);
    }
}

TEST_CASE("right matrix acts on the right") {
  const Vec8 v = right_matrix(Multivector::e(2)) * vectorize(Multivector::e(1));
  CHECK(devectorize(v) == Multivector::e(3));

  verify::Rng rng = verify::trial_rng(5, 100, 0);
  for (int k = 0; k < 50; ++k) {
    const QMultivector a = verify::random_int_mv(rng), b = verify::random_int_mv(rng);
    CHECK(devectorize(left_matrix(a) * vectorize(b)) == a * b);
    CHECK(devectorize(right_matrix(b) * vectorize(a)) == a * b);
    CHECK(right_matrix(a) == k8<Rational>() * left_matrix(a).transpose() * k8<Rational>());
  }
}

TEST_CASE("structural identities on integer inputs") {
  verify::Rng rng = verify::trial_rng(6, 100, 0);
  for (int k = 0; k < 50; ++k) {
    const QMultivector a = verify::random_int_mv(rng), b = verify::random_int_mv(rng);
    CHECK(left_matrix(a * b) == left_matrix(a) * left_matrix(b));
    CHECK(right_matrix(a * b) == right_matrix(b) * right_matrix(a));
    CHECK(left_matrix(a) * right_matrix(b) == right_matrix(b) * left_matrix(a));
    CHECK(left_matrix(prime(a)) == left_matrix(a).transpose());
    CHECK(right_matrix(prime(a)) == right_matrix(a).transpose());
    CHECK(left_matrix(conjugate(a)) == s8<Rational>() * left_matrix(a).transpose() * s8<Rational>());
    CHECK(right_matrix(conjugate(a)) == s8<Rational>() * right_matrix(a).transpose() * s8<Rational>());
    CHECK((left_matrix(a - b) == BasicMat8<Rational>{}) == (a == b));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(left_matrix(mv({{0, 1}, {2, 1}, {4, 1}}))) == doctest::Approx(81.0).epsilon(1e-12));
  CHECK(determinant(Mat8::identity()) == 1.0);
  CHECK(std::abs(determinant(left_matrix(mv({{1, 1}, {2, 1}})))) <= 1e-12);
  Matrix<double, 2, 2> m;
  m(0, 0) = 0;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 4;
  CHECK(determinant(m) == doctest::Approx(-6.0));

  verify::Rng rng = verify::trial_rng(7, 100, 0);
  for (int k = 0; k < 50; ++k) {
    const QMultivector a = verify::random_int_mv(rng);
    const Rational p = functional_P(a);
    CHECK(oracle::determinant(RationalMat::from(left_matrix(a))) == p * p);
    CHECK(oracle::determinant(RationalMat::from(right_matrix(a))) == p * p);
    const double pf = p.get_d();
    const double n4 = norm2_squared(a).get_d() * norm2_squared(a).get_d();
    CHECK(std::abs(determinant(left_matrix(a.cast<double>())) - pf * pf) <= 1e-9 * std::max({1.0, pf * pf, n4 * n4}));
  }
}

TEST_CASE("eigenvalues") {
  const EigenSpectrum s = eigenvalues(ex21);
  const std::complex<double> want[4] = {{0, -1}, {0, 1}, {2, -1}, {2, 1}};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(s.values[static_cast<std::size_t>(k)] - want[k]) <= 1e-12);
  CHECK(EigenSpectrum::multiplicity == 2);

  const EigenSpectrum r = eigenvalues(Multivector::scalar(2.5));
  for (const auto& z : r.values) CHECK(std::abs(z - 2.5) <= 1e-12);

  const EigenSpectrum i7 = eigenvalues(Multivector::e(7));
  CHECK(std::abs(i7.values[0] - std::complex<double>(0, -1)) <= 1e-12);
  CHECK(std::abs(i7.values[1] - std::complex<double>(0, -1)) <= 1e-12);
  CHECK(std::abs(i7.values[2] - std::complex<double>(0, 1)) <= 1e-12);
  CHECK(std::abs(i7.values[3] - std::complex<double>(0, 1)) <= 1e-12);

  // The oracle char poly of L(e7) is (x^2 + 1)^4.
  const oracle::CharPoly cp = oracle::char_poly(RationalMat::from(left_matrix(QMultivector::e(7))));
  CHECK(cp == oracle::poly_from_roots({{0, 1}, {0, -1}}, 4));
}

TEST_CASE("eigenvalues solve their quadratics") {
  verify::Rng rng = verify::trial_rng(8, 100, 0);
  for (int k = 0; k < 100; ++k) {
    const Multivector a = verify::to_float(verify::random_int_mv(rng));
    const Functionals f = functionals(a);
    const EigenSpectrum s = eigenvalues(a);
    CHECK(std::is_sorted(s.values.begin(), s.values.end(), [](auto x, auto y) {
      return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
    }));
    for (const auto& z : s.values) {
      double best = 1e300;
      for (int side : {1, -1}) {
        const std::complex<double> c(a[0], side * a[7]);
        const std::complex<double> cst(f.N, side * 2.0 * f.T);
        best = std::min(best, std::abs(z * z - 2.0 * z * c + cst));
      }
      CHECK(best <= 1e-9 * (1.0 + std::norm(z)));
    }
  }
}
