#pragma once

#include <vector>

#include "qwalk/mat2.hpp"

namespace qwalk {

bool is_power_of_two(int n);
int next_power_of_two(int n);

// In-place radix-2 DFT, size must be a power of two.
//   forward:  a[m] <- sum_j a[j] exp(-2*pi*i*j*m/n)
//   inverse:  a[m] <- sum_j a[j] exp(+2*pi*i*j*m/n)   (unnormalized)
// Twiddle factors are tabulated directly (no accumulated recurrences) and
// the butterfly order is fixed, so results are bit-reproducible run to run.
void fft_forward(std::vector<cplx>& a);
void fft_inverse(std::vector<cplx>& a);

}  // namespace qwalk
