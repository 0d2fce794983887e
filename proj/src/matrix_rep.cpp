#include "cl12/matrix_rep.hpp"

#include <algorithm>

namespace cl12 {

EigenSpectrum eigenvalues(const Multivector& a) {
  using C = std::complex<double>;
  const double n = functional_N(a);
  const double t = functional_T(a);

  EigenSpectrum spectrum;
  std::size_t k = 0;
  for (const double side : {1.0, -1.0}) {
    // lambda^2 - 2 lambda c + (N + 2 T i side) = 0 with c = a0 + side a7 i
    const C c(a[0], side * a[7]);
    const C root = std::sqrt(c * c - C(n, side * 2.0 * t));
    spectrum.values[k++] = c + root;
    spectrum.values[k++] = c - root;
  }
  std::sort(spectrum.values.begin(), spectrum.values.end(), [](const C& x, const C& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return spectrum;
}

}  // namespace cl12
