#pragma once

#include <string>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/momentum.hpp"

namespace qwalk {

// F . (multiply by k) . F* on the scalar lattice. Grid size 0 picks the
// smallest admissible power of two for the window.
ScalarState multiplier_apply(const ScalarSymbol& k, const ScalarState& f, int grid_size = 0);

// amp(x) = <e^{it H(k)} delta_0, delta_x> = (1/2pi) int e^{-ix theta} e^{it k(theta)} dtheta.
struct AmplitudeTable {
  double t = 0.0;
  int x_max = 0;
  std::vector<cplx> amp;  // index x + x_max
  int grid_size = 0;
  double certification_gap = 0.0;  // grid-doubling agreement on |x| <= x_max

  cplx at(int x) const {
    if (x < -x_max || x > x_max) return cplx(0.0, 0.0);
    return amp[static_cast<std::size_t>(x + x_max)];
  }
};

// The grid is sized by the oscillation rule M >= 8 (t sup|k| + X) and then
// certified by doubling; ResolutionTooLow if the cap 2^16 is reached first.
AmplitudeTable ctqw_amplitudes(const ScalarSymbol& k, double t, int x_max);

// p_t(k; x) = |amp(x)|^2 with the support radius chosen so the discarded
// mass stays below 1e-12.
struct LatticeDistribution {
  double t = 0.0;
  std::string symbol_name;
  double symbol_s = 0.0;
  int x_max = 0;
  std::vector<double> p;  // index x + x_max
  double mass_deficit = 0.0;  // 1 - sum of retained masses (signed)

  double at(int x) const {
    if (x < -x_max || x > x_max) return 0.0;
    return p[static_cast<std::size_t>(x + x_max)];
  }
  double total_mass() const;
};

LatticeDistribution distribution(const ScalarSymbol& k, double t);
LatticeDistribution distribution(const AmplitudeTable& amps, const ScalarSymbol& k);

}  // namespace qwalk
