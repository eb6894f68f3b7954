#include "qwalk/ctqw.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/fft.hpp"

namespace qwalk {

namespace {

constexpr int kGridCap = 1 << 16;

// e^{i t k(theta_j)} analyzed on an M-point grid; returns all M aliased
// coefficients, index m <-> site (m <= M/2 ? m : m - M).
std::vector<cplx> amplitude_pass(const ScalarSymbol& k, double t, int M) {
  std::vector<cplx> v(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) {
    const double phase = t * k(kTwoPi * j / M);
    v[static_cast<std::size_t>(j)] = cplx(std::cos(phase), std::sin(phase));
  }
  fft_forward(v);
  const double inv = 1.0 / static_cast<double>(M);
  for (cplx& z : v) z *= inv;
  return v;
}

int oscillation_grid(const ScalarSymbol& k, double t, int x_extent) {
  const double need = 8.0 * (std::abs(t) * k.sup_abs() + static_cast<double>(x_extent));
  const int m = next_power_of_two(std::max(1024, static_cast<int>(std::ceil(need))));
  if (m > kGridCap)
    throw ResolutionTooLowError("oscillation rule needs grid " + std::to_string(m) +
                                " beyond cap " + std::to_string(kGridCap));
  return m;
}

int estimated_support(const ScalarSymbol& k, double t) {
  // ballistic spread plus a generous Airy-edge widening
  return static_cast<int>(
      std::ceil(k.sup_abs_derivative() * std::abs(t) + 6.0 * std::cbrt(std::abs(t) + 1.0) + 30.0));
}

}  // namespace

ScalarState multiplier_apply(const ScalarSymbol& k, const ScalarState& f, int grid_size) {
  const int N = f.radius();
  int M = grid_size;
  if (M == 0) M = next_power_of_two(std::max(1024, 4 * (N + 2)));
  if (!is_power_of_two(M) || M < 2 * (2 * N + 2))
    throw ResolutionTooLowError("multiplier grid too small: " + std::to_string(M));

  std::vector<cplx> v(static_cast<std::size_t>(M), cplx(0.0, 0.0));
  for (int x = -N; x <= N; ++x) v[static_cast<std::size_t>((x % M + M) % M)] += f.at(x);
  fft_inverse(v);
  for (int j = 0; j < M; ++j) v[static_cast<std::size_t>(j)] *= k(kTwoPi * j / M);
  fft_forward(v);
  ScalarState g(N);
  const double inv = 1.0 / static_cast<double>(M);
  for (int x = -N; x <= N; ++x) g.at(x) = v[static_cast<std::size_t>((x % M + M) % M)] * inv;
  return g;
}

AmplitudeTable ctqw_amplitudes(const ScalarSymbol& k, double t, int x_max) {
  if (x_max < 0) throw DomainError("x_max must be nonnegative");
  int M = oscillation_grid(k, t, x_max);

  std::vector<cplx> coarse = amplitude_pass(k, t, M);
  while (true) {
    if (2 * M > kGridCap)
      throw ResolutionTooLowError("amplitude table did not certify below the grid cap");
    std::vector<cplx> fine = amplitude_pass(k, t, 2 * M);
    double gap = 0.0;
    for (int x = -x_max; x <= x_max; ++x) {
      const cplx a = coarse[static_cast<std::size_t>((x % M + M) % M)];
      const cplx b = fine[static_cast<std::size_t>((x % (2 * M) + 2 * M) % (2 * M))];
      gap = std::max(gap, std::abs(a - b));
    }
    if (gap < 1e-12) {
      AmplitudeTable out;
      out.t = t;
      out.x_max = x_max;
      out.grid_size = 2 * M;
      out.certification_gap = gap;
      out.amp.resize(static_cast<std::size_t>(2 * x_max + 1));
      for (int x = -x_max; x <= x_max; ++x)
        out.amp[static_cast<std::size_t>(x + x_max)] =
            fine[static_cast<std::size_t>((x % (2 * M) + 2 * M) % (2 * M))];
      return out;
    }
    coarse = std::move(fine);
    M *= 2;
  }
}

double LatticeDistribution::total_mass() const {
  double acc = 0.0;
  for (double v : p) acc += v;  // ascending site order
  return acc;
}

LatticeDistribution distribution(const ScalarSymbol& k, double t) {
  const int x_est = estimated_support(k, t);
  AmplitudeTable amps = ctqw_amplitudes(k, t, x_est);

  // shrink the window until just before the discarded tail would matter
  const int limit = amps.x_max;
  double tail = 0.0;
  int x_cut = limit;
  while (x_cut > 0) {
    const double edge = std::norm(amps.at(x_cut)) + std::norm(amps.at(-x_cut));
    if (tail + edge > 1e-13) break;
    tail += edge;
    --x_cut;
  }

  LatticeDistribution d;
  d.t = t;
  d.symbol_name = k.name();
  d.symbol_s = k.s();
  d.x_max = x_cut;
  d.p.resize(static_cast<std::size_t>(2 * x_cut + 1));
  for (int x = -x_cut; x <= x_cut; ++x)
    d.p[static_cast<std::size_t>(x + x_cut)] = std::norm(amps.at(x));
  d.mass_deficit = 1.0 - d.total_mass();
  return d;
}

LatticeDistribution distribution(const AmplitudeTable& amps, const ScalarSymbol& k) {
  LatticeDistribution d;
  d.t = amps.t;
  d.symbol_name = k.name();
  d.symbol_s = k.s();
  d.x_max = amps.x_max;
  d.p.resize(static_cast<std::size_t>(2 * amps.x_max + 1));
  for (int x = -amps.x_max; x <= amps.x_max; ++x)
    d.p[static_cast<std::size_t>(x + amps.x_max)] = std::norm(amps.at(x));
  d.mass_deficit = 1.0 - d.total_mass();
  return d;
}

}  // namespace qwalk
