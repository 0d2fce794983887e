#pragma once

// Hand transcription of the closed-form left multiplication matrix
//
//   a0  a1 -a2  a3 -a4  a5 -a6 -a7
//   a1  a0 -a3  a2 -a5  a4 -a7 -a6
//   a2 -a3  a0  a1 -a6 -a7  a4 -a5
//   a3 -a2  a1  a0 -a7 -a6  a5 -a4
//   a4 -a5  a6  a7  a0  a1 -a2  a3
//   a5 -a4  a7  a6  a1  a0 -a3  a2
//   a6  a7 -a4  a5  a2 -a3  a0  a1
//   a7  a6 -a5  a4  a3 -a2  a1  a0
//
// kept separate from left_matrix(), which is generated from the product
// table, so the two can be compared.

#include <array>

#include "cl12/matrix_rep.hpp"

namespace cl12::verify {

// Signed coefficient index per entry: +(t+1) for a_t, -(t+1) for -a_t.
inline constexpr std::array<std::array<int, 8>, 8> kTranscribedL{{
    {{+1, +2, -3, +4, -5, +6, -7, -8}},
    {{+2, +1, -4, +3, -6, +5, -8, -7}},
    {{+3, -4, +1, +2, -7, -8, +5, -6}},
    {{+4, -3, +2, +1, -8, -7, +6, -5}},
    {{+5, -6, +7, +8, +1, +2, -3, +4}},
    {{+6, -5, +8, +7, +2, +1, -4, +3}},
    {{+7, +8, -5, +6, +3, -4, +1, +2}},
    {{+8, +7, -6, +5, +4, -3, +2, +1}},
}};

template <class S>
BasicMat8<S> transcribed_left_matrix(const BasicMultivector<S>& a) {
  BasicMat8<S> m;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const int code = kTranscribedL[i][j];
      const std::size_t t = static_cast<std::size_t>(code > 0 ? code - 1 : -code - 1);
      m(i, j) = code > 0 ? S(a[t]) : S(-a[t]);
    }
  return m;
}

}  // namespace cl12::verify
