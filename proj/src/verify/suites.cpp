#include "cl12/verify/suites.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <utility>

#include "cl12/inverse.hpp"
#include "cl12/matrix_rep.hpp"
#include "cl12/similarity.hpp"
#include "cl12/solver.hpp"
#include "cl12/verify/generators.hpp"
#include "cl12/verify/transcription.hpp"

namespace cl12::verify {

namespace {

using oracle::RationalMat;
using oracle::RationalVec;

/// Records the first failed condition of a trial.
class Check {
 public:
  void operator()(bool ok, const char* what) {
    if (!ok && msg_.empty()) msg_ = what;
  }
  const std::string& message() const { return msg_; }

 private:
  std::string msg_;
};

using TrialFn = std::function<std::string(Rng&, int)>;

SuiteReport run_trials(const std::string& name, std::uint32_t suite_id, const SuiteOptions& o,
                       const TrialFn& fn) {
  SuiteReport report{name, o.trials, 0, {}};
  int first = INT_MAX;

  auto body = [&](int k) -> std::string {
    Rng rng = trial_rng(o.seed, suite_id, static_cast<std::uint32_t>(k));
    try {
      return fn(rng, k);
    } catch (const std::exception& e) {
      return std::string("exception: ") + e.what();
    }
  };
  auto record = [&](int k, std::string msg) {
    if (k < first) {
      first = k;
      report.first_failure = "trial " + std::to_string(k) + ": " + msg;
    }
  };

  if (o.parallel) {
    int failures = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures)
    for (int k = 0; k < o.trials; ++k) {
      std::string msg = body(k);
      if (!msg.empty()) {
        ++failures;
#pragma omp critical(cl12_verify_record)
        record(k, std::move(msg));
      }
    }
    report.failures = failures;
  } else {
    for (int k = 0; k < o.trials; ++k) {
      std::string msg = body(k);
      if (!msg.empty()) {
        ++report.failures;
        record(k, std::move(msg));
      }
    }
  }
  return report;
}

double max_abs_diff(const Multivector& x, const Multivector& y) {
  double m = 0.0;
  for (std::size_t t = 0; t < 8; ++t) m = std::max(m, std::abs(x[t] - y[t]));
  return m;
}

template <class S>
RationalMat to_rmat(const BasicMat8<S>& m) {
  return RationalMat::from(m);
}

QMultivector from_int_coeffs(const std::array<int, 8>& c) {
  QMultivector::Coeffs q;
  for (std::size_t t = 0; t < 8; ++t) q[t] = c[t];
  return QMultivector(q);
}

QMultivector central(const Rational& s, const Rational& t) {
  QMultivector::Coeffs c;
  c.fill(Rational(0));
  c[0] = s;
  c[7] = t;
  return QMultivector(c);
}

bool penrose_holds(const QMultivector& a, const QMultivector& x) {
  const QMultivector ax = a * x;
  const QMultivector xa = x * a;
  return ax * a == a && xa * x == x && prime(ax) == ax && prime(xa) == xa;
}

// Integer imaginary elements (support e1..e6, coefficients in [-2, 2])
// grouped by (N, T); used to draw pairs with matching invariants.
const std::vector<std::vector<QMultivector>>& imaginary_buckets() {
  static const std::vector<std::vector<QMultivector>> buckets = [] {
    std::map<std::pair<long, long>, std::vector<QMultivector>> by_invariants;
    std::array<int, 8> c{};
    for (int code = 0; code < 15625; ++code) {
      int r = code;
      for (std::size_t t = 1; t <= 6; ++t) {
        c[t] = r % 5 - 2;
        r /= 5;
      }
      const QMultivector x = from_int_coeffs(c);
      if (x.is_zero()) continue;
      const long n = functional_N(x).get_num().get_si();
      const long t = functional_T(x).get_num().get_si();
      by_invariants[{n, t}].push_back(x);
    }
    std::vector<std::vector<QMultivector>> out;
    for (auto& [key, v] : by_invariants)
      if (v.size() >= 2) out.push_back(std::move(v));
    return out;
  }();
  return buckets;
}

}  // namespace

SuiteReport suite_product_table() {
  SuiteOptions o{1, 0, false};
  return run_trials("product_table", 0, o, [](Rng&, int) {
    Check check;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        const detail::TableEntry& e = detail::kProductTable[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        const oracle::BladeProduct g = oracle::blade_product(i, j);
        check(e.sign == g.sign && e.index == g.index, "product table disagrees with generator relations");
      }
    for (int t = 0; t < 8; ++t) {
      const QMultivector a = QMultivector::e(t);
      check(left_matrix(a) == transcribed_left_matrix(a), "left_matrix differs from the transcribed matrix");
      check(to_rmat(left_matrix(a)) == oracle::generator_left_matrix(a),
            "left_matrix differs from the generator-derived matrix");
    }
    return check.message();
  });
}

SuiteReport suite_functional_identities(const SuiteOptions& o) {
  return run_trials("functional_identities", 1, o, [](Rng& rng, int) {
    Check check;
    const QMultivector a = random_int_mv(rng);
    const QMultivector b = random_int_mv(rng);
    const QMultivector c = random_int_mv(rng);
    const QMultivector e0 = QMultivector::e(0);
    const QMultivector e7 = QMultivector::e(7);

    check(a * b == oracle::generator_product(a, b), "table product != generator product");
    check((a * b) * c == a * (b * c), "associativity");
    check(a * (b + c) == a * b + a * c && (a + b) * c == a * c + b * c, "distributivity");
    check(e0 * a == a && a * e0 == a, "e0 identity");

    const auto fa = functionals(a);
    const auto fb = functionals(b);
    const auto fab = functionals(a * b);
    const QMultivector ab = conjugate(a);
    const QMultivector ap = prime(a);

    check(fa.T == functional_T(ab) && fa.T == -functional_T(ap), "T(a) = T(conj a) = -T(a')");
    check(fa.N == functional_N(ap) && fa.N == functional_N(ab), "N(a) = N(a') = N(conj a)");
    check(conjugate(a * b) == conjugate(b) * conjugate(a), "conj(ab) = conj(b) conj(a)");
    check(prime(a * b) == prime(b) * prime(a), "(ab)' = b'a'");
    const QMultivector norm_elem = fa.N * e0 + Rational(2 * fa.T) * e7;
    check(a * ab == norm_elem && ab * a == norm_elem, "a conj(a) = N + 2T e7");
    check(fab.T == fa.N * fb.T + fb.N * fa.T, "T(ab) = N(a)T(b) + N(b)T(a)");
    check(fab.N == fa.N * fb.N - 4 * fa.T * fb.T, "N(ab) = N(a)N(b) - 4T(a)T(b)");
    const QMultivector adj = fa.N * e0 - Rational(2 * fa.T) * e7;
    check(a * ab * adj == fa.P * e0 && a * adj * ab == fa.P * e0, "a conj(a) (N - 2T e7) = P");
    check(fab.P == fa.P * fb.P, "P(ab) = P(a) P(b)");
    check(cre(a * b) == cre(b * a), "Cre(ab) = Cre(ba)");
    check(fa.P == fa.N * fa.N + 4 * fa.T * fa.T, "P = N^2 + 4T^2");

    check(cre(a) + cim(a) == a, "Cre + Cim = a");
    check(cre(a) == (a + ab) / Rational(2), "Cre = (a + conj a)/2");
    check(conjugate(ab) == a && prime(ap) == a, "involutions");

    const auto [ah, aH] = split_h(a);
    check(ah + aH * QMultivector::e(4) == a, "a = a_h + a_H e4");

    bool commutes = true;
    for (int t = 1; t <= 6; ++t) commutes = commutes && a * QMultivector::e(t) == QMultivector::e(t) * a;
    check(commutes == is_central(a), "is_central iff commutes with e1..e6");

    // The a'a expansion holds for every a, singular or not.
    QMultivector::Coeffs exp;
    exp.fill(Rational(0));
    exp[0] = norm2_squared(a);
    exp[1] = 2 * fa.T1;
    exp[3] = 2 * fa.T3;
    exp[5] = 2 * fa.T5;
    check(ap * a == QMultivector(exp), "a'a = sum a_t^2 + 2T1 e1 + 2T3 e3 + 2T5 e5");
    return check.message();
  });
}

SuiteReport suite_representation(const SuiteOptions& o) {
  return run_trials("representation", 2, o, [](Rng& rng, int) {
    Check check;
    const QMultivector a = random_int_mv(rng);
    const QMultivector b = random_int_mv(rng);
    const QMultivector x = random_int_mv(rng);
    const Rational lambda = random_int(rng, -5, 5);

    const auto la = left_matrix(a);
    const auto lb = left_matrix(b);
    const auto ra = right_matrix(a);
    const auto rb = right_matrix(b);

    check(left_matrix(a * b) == la * lb, "L(ab) = L(a) L(b)");
    check(right_matrix(a * b) == rb * ra, "R(ab) = R(b) R(a)");
    check(la * rb == rb * la, "L(a) R(b) = R(b) L(a)");
    check(left_matrix(a + b) == la + lb && right_matrix(a + b) == ra + rb, "additivity");
    check(left_matrix(lambda * a) == lambda * la && right_matrix(lambda * a) == lambda * ra, "homogeneity");
    check((la == lb) == (a == b) && (ra == rb) == (a == b), "faithfulness");
    check(left_matrix(a - a) == BasicMat8<Rational>(), "L(0) = 0");
    check(left_matrix(QMultivector::e(0)) == BasicMat8<Rational>::identity(), "L(e0) = E8");

    check(vectorize(a * x) == la * vectorize(x), "vec(ax) = L(a) vec(x)");
    check(vectorize(x * a) == ra * vectorize(x), "vec(xa) = R(a) vec(x)");
    check(devectorize(vectorize(a)) == a, "vectorize round trip");
    check(to_rmat(la) == oracle::generator_left_matrix(a), "L(a) = generator-derived matrix");

    const auto k = k8<Rational>();
    const auto s = s8<Rational>();
    check(ra == k * la.transpose() * k, "R(a) = K8 L(a)^T K8");
    check(left_matrix(prime(a)) == la.transpose(), "L(a') = L(a)^T");
    check(right_matrix(prime(a)) == ra.transpose(), "R(a') = R(a)^T");
    check(left_matrix(conjugate(a)) == s * la.transpose() * s, "L(conj a) = S8 L(a)^T S8");
    check(right_matrix(conjugate(a)) == s * ra.transpose() * s, "R(conj a) = S8 R(a)^T S8");

    const Rational p = functional_P(a);
    const Rational p2 = p * p;
    check(oracle::determinant(to_rmat(la)) == p2 && oracle::determinant(to_rmat(ra)) == p2,
          "exact det L(a) = det R(a) = P(a)^2");

    const Multivector af = to_float(a);
    const double p2f = p2.get_d();
    const double n2 = norm2_squared(af);
    // Degree-8 quantity: compare relative to max(P^2, ||a||^8).
    const double scale = std::max({1.0, p2f, n2 * n2 * n2 * n2});
    check(std::abs(determinant(left_matrix(af)) - p2f) <= 1e-9 * scale, "float det L(a) = P(a)^2");
    check(std::abs(determinant(right_matrix(af)) - p2f) <= 1e-9 * scale, "float det R(a) = P(a)^2");
    return check.message();
  });
}

SuiteReport suite_eigenvalues(const SuiteOptions& o) {
  return run_trials("eigenvalues", 3, o, [](Rng& rng, int) {
    Check check;
    const QMultivector a = random_int_mv(rng);
    const auto f = functionals(a);

    // ((x^2 - 2 a0 x + N)^2 + 4 (T - a7 x)^2)^2, the product of the two
    // quadratics, squared.
    const oracle::Polynomial q{{f.N, -2 * a[0], 1}};
    const oracle::Polynomial l{{f.T, -a[7]}};
    oracle::Polynomial quartic = q * q;
    const oracle::Polynomial l2 = l * l;
    for (std::size_t k = 0; k < l2.coefficients.size(); ++k) quartic.coefficients[k] += 4 * l2.coefficients[k];
    const RationalMat la = to_rmat(left_matrix(a));
    const oracle::CharPoly cp = oracle::char_poly(la);
    check(cp == quartic * quartic, "char_poly(L(a)) = (product of the two quadratics)^2");
    check(cp.coefficients[7] == -la.trace(), "lambda^7 coefficient = -trace");

    const Multivector af = to_float(a);
    const EigenSpectrum spectrum = eigenvalues(af);
    using C = std::complex<long double>;
    for (const std::complex<double>& lam : spectrum.values) {
      const C z(lam.real(), lam.imag());
      double best = INFINITY;
      for (const double side : {1.0, -1.0}) {
        const C c(af[0], side * af[7]);
        const C r = z * z - 2.0L * z * c + C(f.N.get_d(), side * 2.0 * f.T.get_d());
        best = std::min(best, static_cast<double>(std::abs(r)));
      }
      check(best <= 1e-9 * (1.0 + std::norm(lam)), "eigenvalue is a root of one of the quadratics");

      C acc(0.0L, 0.0L);
      for (std::size_t k = cp.coefficients.size(); k-- > 0;)
        acc = acc * z + C(static_cast<long double>(cp.coefficients[k].get_d()), 0.0L);
      check(static_cast<double>(std::abs(acc)) <= 1e-9 * (1.0 + std::pow(std::abs(lam), 8)),
            "char_poly vanishes at the eigenvalue");
    }
    for (std::size_t k = 1; k < 4; ++k) {
      const auto& x = spectrum.values[k - 1];
      const auto& y = spectrum.values[k];
      check(x.real() < y.real() || (x.real() == y.real() && x.imag() <= y.imag()), "eigenvalues sorted");
    }
    return check.message();
  });
}

SuiteReport suite_mp_inverse(const SuiteOptions& o) {
  return run_trials("mp_inverse", 4, o, [](Rng& rng, int k) {
    Check check;
    const QMultivector a = (k % 2 == 1) ? forced_singular(rng) : random_int_mv(rng);
    const auto r = mp_inverse(a);
    const QMultivector& x = r.pinv;

    const PinvKind expected = a.is_zero()                        ? PinvKind::Zero
                              : functional_P(a) != Rational(0) ? PinvKind::Invertible
                                                               : PinvKind::SingularNonzero;
    check(r.kind == expected, "case dispatch");
    check(penrose_holds(a, x), "Penrose conditions (exact)");

    const RationalMat la = to_rmat(left_matrix(a));
    const RationalMat ra = to_rmat(right_matrix(a));
    check(to_rmat(left_matrix(x)) == oracle::exact_pinv(la), "L(a+) = L(a)+");
    check(to_rmat(right_matrix(x)) == oracle::exact_pinv(ra), "R(a+) = R(a)+");
    check(oracle::rank(la) == oracle::rank(la.transpose() * la), "rank L(a) = rank L(a)^T L(a)");

    if (r.kind == PinvKind::Invertible) {
      check(x == inverse(a), "a+ = a^-1 when invertible");
      check(a * x == QMultivector::e(0) && x * a == QMultivector::e(0), "a a^-1 = a^-1 a = 1");
    }

    for (int p = 0; p < 10; ++p) {
      const QMultivector delta = random_nonzero_mv(rng, -3, 3) / Rational(random_int(rng, 1, 4));
      check(!penrose_holds(a, x + delta), "uniqueness: perturbed candidate satisfies all conditions");
    }

    int lambda = 0;
    while (lambda == 0) lambda = random_int(rng, -3, 3);
    check(mp_inverse(Rational(lambda) * a).pinv == x / Rational(lambda), "mp_inverse(la) = mp_inverse(a)/l");

    const MPResult rf = mp_inverse(to_float(a));
    check(rf.kind == r.kind, "float case dispatch agrees with exact");
    const Multivector xf = to_float(x);
    check(max_abs_diff(rf.pinv, xf) <= 1e-12 * (1.0 + norm2(xf)), "float a+ agrees with exact a+");
    return check.message();
  });
}

SuiteReport suite_singular_structure(const SuiteOptions& o) {
  return run_trials("singular_structure", 5, o, [](Rng& rng, int) {
    Check check;
    const QMultivector a = forced_singular(rng);
    const auto f = functionals(a);
    check(f.P == 0 && f.N == 0 && f.T == 0, "forced-singular input has N = T = 0");

    QMultivector::Coeffs exp;
    exp.fill(Rational(0));
    exp[0] = norm2_squared(a);
    exp[1] = 2 * f.T1;
    exp[3] = 2 * f.T3;
    exp[5] = 2 * f.T5;
    check(prime(a) * a == QMultivector(exp), "a'a expansion");
    check(f.T1 * f.T1 + f.T3 * f.T3 + f.T5 * f.T5 == f.K * f.K, "T1^2 + T3^2 + T5^2 = K^2");
    check(f.K > 0 && 2 * f.K == norm2_squared(a), "K = half the squared norm > 0");
    const QMultivector v = prime(a) * a;
    check(v * v == 4 * f.K * v, "(a'a)^2 = 4K a'a");
    check(is_singular(to_float(a)), "float is_singular");
    return check.message();
  });
}

SuiteReport suite_solver(const SuiteOptions& o) {
  return run_trials("solver", 6, o, [](Rng& rng, int k) {
    Check check;
    const QMultivector a = (k % 2 == 0) ? forced_singular(rng) : random_invertible(rng);
    const QMultivector b = ((k / 2) % 2 == 0) ? forced_singular(rng) : random_invertible(rng);
    const QMultivector d = random_int(rng, 0, 1) == 0 ? a * random_int_mv(rng) * b : random_int_mv(rng);

    const RationalMat m = to_rmat(left_matrix(a)) * to_rmat(right_matrix(b));
    const oracle::ExactSolution exact = oracle::exact_solve(m, oracle::to_vec(d));
    const int exact_dim = static_cast<int>(exact.nullspace.size());
    check(exact_dim == 8 - static_cast<int>(oracle::rank(m)), "oracle nullity = 8 - rank");

    // Closed form in exact arithmetic against the matrix oracle.
    const auto forms = axb_forms(a, b, d);
    check((forms.image == d) == exact.consistent, "exact solvability: a a+ d b+ b = d iff A A+ d = d");
    const RationalVec min_norm = oracle::exact_pinv(m) * oracle::to_vec(d);
    check(oracle::to_vec(forms.particular) == min_norm, "a+ d b+ = (L(a) R(b))+ vec(d)");
    if (exact.consistent) check(a * forms.particular * b == d, "exact particular solves axb = d");
    const QMultivector y = random_int_mv(rng);
    const QMultivector py = homogeneous_projection(forms, a, b, y);
    check(homogeneous_projection(forms, a, b, py) == py, "projector idempotent (exact)");
    check(a * py * b == QMultivector(), "projected y solves the homogeneous equation");

    const Multivector af = to_float(a), bf = to_float(b), df = to_float(d);
    const SolutionSet s = solve_axb(af, bf, df);
    check(s.solvable == exact.consistent, "solvable flag matches oracle");
    check(s.dim == exact_dim, "homogeneous dimension matches oracle");
    check(s.particular.has_value() == s.solvable, "particular defined iff solvable");

    const double tol = 1e-9 * (1.0 + norm2(df));
    if (s.solvable) {
      check(norm2(af * *s.particular * bf - df) <= tol, "particular residual");
      check(s.residual <= tol, "reported residual");
      for (int trial = 0; trial < 10; ++trial) {
        Multivector x = *s.particular;
        for (const Multivector& h : s.hom_basis)
          x = x + std::uniform_real_distribution<double>(-5.0, 5.0)(rng) * h;
        check(norm2(af * x * bf - df) <= tol, "particular + homogeneous combination residual");
      }
    } else {
      check(s.residual > tol, "unsolvable residual is positive");
    }
    for (const Multivector& h : s.hom_basis) {
      check(norm2(af * h * bf) <= 1e-9 * (1.0 + norm2(af) * norm2(bf)), "basis element solves a h b = 0");
      check(std::abs(norm2(h) - 1.0) <= 1e-9, "basis element normalized");
    }
    if (s.solvable && s.dim == 0 && functional_P(a) != 0 && functional_P(b) != 0) {
      const Multivector fast = inverse(af) * df * inverse(bf);
      check(max_abs_diff(fast, *s.particular) <= 1e-9 * (1.0 + norm2(fast)), "invertible fast path agrees");
    }
    return check.message();
  });
}

SuiteReport suite_similarity(const SuiteOptions& o) {
  return run_trials("similarity", 7, o, [](Rng& rng, int k) {
    Check check;

    // 1. Constructed similar pair b = q a q^-1.
    {
      QMultivector a;
      do {
        a = random_noncentral(rng);
      } while (functional_N(cim(a)) == 0 || functional_T(cim(a)) == 0);
      const QMultivector q = random_invertible(rng);
      const QMultivector b = q * a * inverse(q);
      const Multivector af = to_float(a), bf = to_float(b);
      const SimilarityResult r = is_similar(af, bf);
      check(r.similar && r.reason == SimilarityReason::InvariantsMatch, "constructed pair classified similar");
      if (r.similar) {
        check(r.witness.has_value(), "similar => witness");
        const Multivector& w = *r.witness;
        check(!is_singular(w), "witness invertible");
        const double scale = 1.0 + norm2(w) * std::max(norm2(af), norm2(bf));
        check(norm2(w * af - bf * w) <= 1e-9 * scale, "witness satisfies q a = b q");
        if (cim(a) != cim(b)) check(r.candidate.has_value(), "witness found in the t = 0..7 scan");
      }

      // 2. One invariant perturbed.
      Multivector bad;
      SimilarityReason expected;
      switch (k % 3) {
        case 0:
          bad = bf + Multivector::scalar(1.0);
          expected = SimilarityReason::CreMismatch;
          break;
        case 1:
          bad = cre(bf) + 2.0 * cim(bf);
          expected = SimilarityReason::NMismatch;
          break;
        default: {
          // Rotate N + 2T e7 of Cim(b) to its conjugate with a central unit:
          // N(Cim) is kept and T(Cim) changes sign.
          const double n = functional_N(cim(a)).get_d();
          const double t = functional_T(cim(a)).get_d();
          const double w = std::hypot(n, 2.0 * t);
          Multivector::Coeffs zc{};
          zc[0] = n / w;
          zc[7] = -2.0 * t / w;
          bad = cre(bf) + Multivector(zc) * cim(bf);
          expected = SimilarityReason::TMismatch;
        }
      }
      const SimilarityResult rb = is_similar(af, bad);
      check(!rb.similar && rb.reason == expected && !rb.witness, "perturbed pair classified with the right reason");
    }

    // 3. Exact candidate completeness on integer imaginary parts with
    // matching N and T.
    {
      const auto& buckets = imaginary_buckets();
      const auto& bucket = buckets[static_cast<std::size_t>(random_int(rng, 0, static_cast<int>(buckets.size()) - 1))];
      const int n = static_cast<int>(bucket.size());
      const int i = random_int(rng, 0, n - 1);
      int j = random_int(rng, 0, n - 2);
      if (j >= i) ++j;
      const QMultivector& ca = bucket[static_cast<std::size_t>(i)];
      const QMultivector& cb = bucket[static_cast<std::size_t>(j)];

      bool any_invertible = false;
      for (int t = 0; t < 4; ++t) {
        const QMultivector e = QMultivector::e(t);
        const QMultivector x = cb * e + e * ca;
        check(x * ca == cb * x, "candidate satisfies x Cim(a) = Cim(b) x");
        any_invertible = any_invertible || functional_P(x) != 0;
      }
      check(any_invertible, "one of the t = 0..3 candidates is invertible");

      const QMultivector shift = central(random_int(rng, -3, 3), random_int(rng, -3, 3));
      const Multivector af = to_float(shift + ca), bf = to_float(shift + cb);
      const SimilarityResult r = is_similar(af, bf);
      check(r.similar && r.candidate.has_value() && *r.candidate < 4, "integer pair: witness among t = 0..3");
      if (r.witness) check(*r.witness * af == bf * *r.witness, "integer pair: q a = b q exactly");
    }
    return check.message();
  });
}

SuiteReport suite_conjugation(const SuiteOptions& o) {
  return run_trials("conjugation", 8, o, [](Rng& rng, int) {
    Check check;
    const QMultivector q = random_invertible(rng);
    const Multivector qf = to_float(q);
    const ConjugationMatrix cm = conjugation_matrix(qf);

    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j : {0u, 7u}) {
        const double id = (i == j) ? 1.0 : 0.0;
        check(std::abs(cm.full(i, j) - id) <= 1e-9 && std::abs(cm.full(j, i) - id) <= 1e-9,
              "full = diag(1, S, 1)");
      }
    const double det_s = determinant(cm.block);
    check(std::abs(det_s) > 1e-9, "det S != 0");
    check(std::abs(det_s - 1.0) <= 1e-9, "det S = P(q)^2 P(q^-1)^2 = 1");

    const BasicMat8<Rational> exact_full = left_matrix(q) * right_matrix(inverse(q));
    bool exact_block = true;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j : {0u, 7u}) {
        const Rational id = (i == j) ? 1 : 0;
        exact_block = exact_block && exact_full(i, j) == id && exact_full(j, i) == id;
      }
    check(exact_block, "exact block structure");

    const QMultivector x = random_int_mv(rng);
    const QMultivector y = q * x * inverse(q);
    check(cre(y) == cre(x) && functional_N(y) == functional_N(x) && functional_T(y) == functional_T(x),
          "Cre, N, T invariant under conjugation");
    check(cim(y) == q * cim(x) * inverse(q), "Cim maps to Cim");
    int lambda = 0;
    while (lambda == 0) lambda = random_int(rng, -4, 4);
    const QMultivector lq = Rational(lambda) * q;
    check(lq * x * inverse(lq) == y, "conjugation is homogeneous of degree 0 in q");

    const Multivector yf = conjugate_by(qf, to_float(x));
    check(max_abs_diff(yf, to_float(y)) <= 1e-9 * (1.0 + norm2(to_float(x))), "float conjugate_by");
    return check.message();
  });
}

std::vector<SuiteReport> run_all_suites(const SuiteOptions& o) {
  return {
      suite_product_table(),          suite_functional_identities(o), suite_representation(o),
      suite_eigenvalues(o),           suite_mp_inverse(o),            suite_singular_structure(o),
      suite_solver(o),                suite_similarity(o),            suite_conjugation(o),
  };
}

}  // namespace cl12::verify
