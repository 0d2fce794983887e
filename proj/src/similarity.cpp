#include "cl12/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cl12/inverse.hpp"

namespace cl12 {

Multivector conjugate_by(const Multivector& q, const Multivector& x, double tol) {
  return q * x * inverse(q, tol);
}

ConjugationMatrix conjugation_matrix(const Multivector& q, double tol) {
  ConjugationMatrix cm;
  cm.full = left_matrix(q) * right_matrix(inverse(q, tol));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) cm.block(i, j) = cm.full(i + 1, j + 1);
  return cm;
}

std::string_view to_string(SimilarityReason r) {
  switch (r) {
    case SimilarityReason::CentralEqual: return "CentralEqual";
    case SimilarityReason::CentralUnequal: return "CentralUnequal";
    case SimilarityReason::InvariantsMatch: return "InvariantsMatch";
    case SimilarityReason::CreMismatch: return "CreMismatch";
    case SimilarityReason::NMismatch: return "NMismatch";
    case SimilarityReason::TMismatch: return "TMismatch";
  }
  return "?";
}

namespace {

bool close(double x, double y, double tol) { return std::abs(x - y) <= tol; }

bool close(const Multivector& x, const Multivector& y, double tol) {
  for (std::size_t t = 0; t < 8; ++t)
    if (!close(x[t], y[t], tol)) return false;
  return true;
}

}  // namespace

SimilarityResult is_similar(const Multivector& a, const Multivector& b, double tol, std::uint64_t seed) {
  const double scale = std::max(norm2(a), norm2(b));
  const double tol1 = tol * (1.0 + scale);
  const double tol2 = tol * (1.0 + scale * scale);

  SimilarityResult r;
  const bool a_central = is_central(a, tol1);
  const bool b_central = is_central(b, tol1);
  if (a_central && b_central) {
    // A central element is its own Cre, so inequality is a Cre mismatch.
    r.similar = close(a, b, tol1);
    r.reason = r.similar ? SimilarityReason::CentralEqual : SimilarityReason::CreMismatch;
    if (r.similar) r.witness = Multivector::scalar(1.0);
    return r;
  }
  if (a_central != b_central) {
    r.reason = SimilarityReason::CentralUnequal;
    return r;
  }

  if (!close(cre(a), cre(b), tol1)) {
    r.reason = SimilarityReason::CreMismatch;
    return r;
  }
  if (!close(functional_N(a), functional_N(b), tol2)) {
    r.reason = SimilarityReason::NMismatch;
    return r;
  }
  if (!close(functional_T(a), functional_T(b), tol2)) {
    r.reason = SimilarityReason::TMismatch;
    return r;
  }

  r.similar = true;
  r.reason = SimilarityReason::InvariantsMatch;
  const Multivector ia = cim(a);
  const Multivector ib = cim(b);
  if (close(ia, ib, tol1)) {
    r.witness = Multivector::scalar(1.0);
    return r;
  }

  for (int t = 0; t < 8; ++t) {
    const Multivector e = Multivector::e(t);
    const Multivector x = ib * e + e * ia;
    if (norm2(x) > tol1 && !is_singular(x, tol)) {
      r.witness = x;
      r.candidate = t;
      return r;
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Multivector::Coeffs c;
    for (double& v : c) v = coeff(rng);
    const Multivector p(c);
    const Multivector x = ib * p + p * ia;
    if (norm2(x) > tol1 && !is_singular(x, tol)) {
      r.witness = x;
      return r;
    }
  }
  detail::invariant_failure("an invertible similarity witness exists when invariants agree");
}

}  // namespace cl12
