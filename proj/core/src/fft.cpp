#include "qwalk/fft.hpp"

#include <cstddef>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int next_power_of_two(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

namespace {

void fft_impl(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0) return;
  if (!is_power_of_two(static_cast<int>(n)))
    throw DomainError("fft: size must be a power of two");

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  // half-size twiddle table; entries computed by direct trig calls so that
  // no rounding error accumulates across stages
  const double sgn = inverse ? 1.0 : -1.0;
  std::vector<cplx> tw(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double ang = sgn * kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    tw[k] = cplx(std::cos(ang), std::sin(ang));
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t blk = 0; blk < n; blk += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx w = tw[k * stride];
        const cplx u = a[blk + k];
        const cplx v = a[blk + k + len / 2] * w;
        a[blk + k] = u + v;
        a[blk + k + len / 2] = u - v;
      }
    }
  }
}

}  // namespace

void fft_forward(std::vector<cplx>& a) { fft_impl(a, false); }
void fft_inverse(std::vector<cplx>& a) { fft_impl(a, true); }

}  // namespace qwalk
