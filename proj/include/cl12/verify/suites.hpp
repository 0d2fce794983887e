#pragma once

// Randomized cross-checks of every closed form against the exact oracle.
//
// Each suite runs `trials` independent trials. Trial k draws from
// trial_rng(seed, suite id, k), so the outcome does not depend on thread
// scheduling: the OpenMP path and the serial reference path produce
// identical reports.

#include <cstdint>
#include <string>
#include <vector>

namespace cl12::verify {

struct SuiteReport {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;  // description of the lowest-index failing trial

  bool passed() const { return failures == 0; }
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

struct SuiteOptions {
  int trials = 100;
  std::uint64_t seed = 42;
  bool parallel = true;
};

/// The product table against the generator relations, and L(a) built from the table
/// against the transcribed closed-form matrix. Deterministic; ignores trials.
SuiteReport suite_product_table();

/// Ring axioms and the functional identities for conjugate/prime, N, T, P,
/// Cre, checked exactly on integer pairs (the library's rational mirror
/// against the generator-derived product).
SuiteReport suite_functional_identities(const SuiteOptions& o);

/// Homomorphism, faithfulness, involution transport (exact) and
/// det L(a) = det R(a) = P(a)^2 (float, relative 1e-9).
SuiteReport suite_representation(const SuiteOptions& o);

/// Closed-form eigenvalues: quadratic residuals, the exact identity
/// char_poly(L(a)) = ((x^2 - 2 a0 x + N)^2 + 4 (T - a7 x)^2)^2, trace term.
SuiteReport suite_eigenvalues(const SuiteOptions& o);

/// Moore-Penrose inverse: odd trials use a forced-singular input. Exact
/// Penrose conditions, L(a+) = L(a)+ and R(a+) = R(a)+ against exact_pinv,
/// rank L = rank L^T L, uniqueness against perturbations, scaling, and the
/// float path against the exact one.
SuiteReport suite_mp_inverse(const SuiteOptions& o);

/// Forced-singular nonzero inputs: a'a expansion and T1^2 + T3^2 + T5^2 = K^2.
SuiteReport suite_singular_structure(const SuiteOptions& o);

/// solve_axb against exact_solve of L(a) R(b) vec(x) = vec(d): solvability,
/// homogeneous dimension, soundness of sampled solutions, projector law.
SuiteReport suite_solver(const SuiteOptions& o);

/// Per trial: one constructed similar pair b = q a q^-1, one pair with a
/// single perturbed invariant, and one exact witness-candidate check.
SuiteReport suite_similarity(const SuiteOptions& o);

/// conjugation_matrix block structure, det S != 0, conjugation invariants.
SuiteReport suite_conjugation(const SuiteOptions& o);

std::vector<SuiteReport> run_all_suites(const SuiteOptions& o);

}  // namespace cl12::verify
