#pragma once

// Fixed-precision text and JSON output. Numbers carry at most 12
// significant digits so that golden outputs are stable across platforms.

#include <complex>
#include <string>

#include "json.hpp"

#include "cl12/matrix_rep.hpp"
#include "cl12/multivector.hpp"

namespace cl12::cli {

/// Rounds to 12 significant digits; -0 becomes 0.
double round12(double x);

/// "%.12g" of round12(x).
std::string format_number(double x);

/// e.g. "0.25 + 0.25 e1 - 0.25 e6 - 0.25 e7", "e5", "-e1", "0". Coefficients
/// below 1e-12 of the largest one are dropped. The text parses back with
/// parse_literal.
std::string format_multivector(const Multivector& a);

/// e.g. "2-i", "-i", "0.5+1.25i".
std::string format_complex(std::complex<double> z);

std::string format_matrix(const Mat8& m);

/// {"coeffs": [8], "N": .., "T": .., "P": ..}
nlohmann::json multivector_json(const Multivector& a);

}  // namespace cl12::cli
