#pragma once

// Random integer multivectors for property checks.

#include <cstdint>
#include <random>

#include "cl12/multivector.hpp"
#include "cl12/oracle/rational.hpp"

namespace cl12::verify {

using Rng = std::mt19937_64;
using oracle::QMultivector;
using oracle::Rational;

/// Deterministic per-trial generator, independent of scheduling order.
inline Rng trial_rng(std::uint64_t seed, std::uint32_t suite, std::uint32_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), suite, trial};
  return Rng(seq);
}

inline int random_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline QMultivector random_int_mv(Rng& rng, int lo = -5, int hi = 5) {
  QMultivector::Coeffs c;
  for (Rational& x : c) x = random_int(rng, lo, hi);
  return QMultivector(c);
}

inline QMultivector random_nonzero_mv(Rng& rng, int lo = -5, int hi = 5) {
  for (;;) {
    QMultivector a = random_int_mv(rng, lo, hi);
    if (!a.is_zero()) return a;
  }
}

/// A nonzero singular element (e1 + e2) y or (1 + e1) y; both factors have
/// P = 0 and P is multiplicative.
inline QMultivector forced_singular(Rng& rng) {
  const QMultivector f = random_int(rng, 0, 1) == 0 ? QMultivector::e(1) + QMultivector::e(2)
                                                     : QMultivector::e(0) + QMultivector::e(1);
  for (;;) {
    QMultivector a = f * random_int_mv(rng);
    if (!a.is_zero()) return a;
  }
}

inline QMultivector random_invertible(Rng& rng, int lo = -5, int hi = 5) {
  for (;;) {
    QMultivector a = random_int_mv(rng, lo, hi);
    if (!is_singular(a)) return a;
  }
}

inline QMultivector random_noncentral(Rng& rng) {
  for (;;) {
    QMultivector a = random_int_mv(rng);
    if (!is_central(a)) return a;
  }
}

inline Multivector to_float(const QMultivector& a) { return a.cast<double>(); }

}  // namespace cl12::verify
