#pragma once

#include <complex>
#include <vector>

#include "wwlab/fix128.hpp"

namespace wwlab {

// In-place radix-2 transform, sign = -1 forward / +1 inverse (unscaled).
void fft_pow2(std::vector<cplx>& a, int sign);

// X_j = sum_{n < L} x_n e(+ n j / M) for j = 0..M-1, any M >= 1.
// Radix-2 when M is a power of two and L <= M, Bluestein otherwise.
std::vector<cplx> circle_eval(const std::vector<cplx>& x, std::size_t M);

}  // namespace wwlab
