#include "qwalk/csv.hpp"

#include <cstdio>

namespace qwalk {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {
void put_mat(std::ostream& os, const Mat2& m) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      os << ',' << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag());
}
}  // namespace

void write_state_csv(std::ostream& os, const SpinorState& f) {
  os << "site,re_up,im_up,re_down,im_down\n";
  for (int x = -f.radius(); x <= f.radius(); ++x) {
    os << x << ',' << format_double(f.at(x, 0).real()) << ','
       << format_double(f.at(x, 0).imag()) << ',' << format_double(f.at(x, 1).real()) << ','
       << format_double(f.at(x, 1).imag()) << '\n';
  }
}

void write_kernel_csv(std::ostream& os, const MatrixKernel& k) {
  os << "offset,d11_re,d11_im,d12_re,d12_im,d21_re,d21_im,d22_re,d22_im\n";
  for (int y = -k.radius; y <= k.radius; ++y) {
    os << y;
    put_mat(os, k.at(y));
    os << '\n';
  }
}

void write_symbol_csv(std::ostream& os, const MomentumSymbol& sym) {
  os << "theta,m11_re,m11_im,m12_re,m12_im,m21_re,m21_im,m22_re,m22_im\n";
  for (int j = 0; j < sym.grid.size; ++j) {
    os << format_double(sym.grid.node(j));
    put_mat(os, sym.values[static_cast<std::size_t>(j)]);
    os << '\n';
  }
}

void write_coefficients_csv(std::ostream& os, const CoefficientTable& t) {
  os << "x,re,im\n";
  for (int x = -t.x_max; x <= t.x_max; ++x)
    os << x << ',' << format_double(t.at(x).real()) << ',' << format_double(t.at(x).imag())
       << '\n';
}

void write_distribution_csv(std::ostream& os, const LatticeDistribution& d) {
  os << "x,p\n";
  for (int x = -d.x_max; x <= d.x_max; ++x)
    os << x << ',' << format_double(d.at(x)) << '\n';
}

}  // namespace qwalk
