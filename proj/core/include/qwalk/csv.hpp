#pragma once

#include <ostream>
#include <string>

#include "qwalk/ctqw.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/momentum.hpp"

namespace qwalk {

// Floats are printed with 17 significant digits so CSV round-trips are
// value-exact and reruns are byte-identical.
std::string format_double(double v);

// site, re_up, im_up, re_down, im_down
void write_state_csv(std::ostream& os, const SpinorState& f);
// offset, 8 floats (row-major 2x2 complex)
void write_kernel_csv(std::ostream& os, const MatrixKernel& k);
// theta, 8 floats (row-major 2x2 complex)
void write_symbol_csv(std::ostream& os, const MomentumSymbol& sym);
// x, re, im
void write_coefficients_csv(std::ostream& os, const CoefficientTable& t);
// x, p
void write_distribution_csv(std::ostream& os, const LatticeDistribution& d);

}  // namespace qwalk
