// qwalk: coined-walk Hamiltonian kernels, momentum-space verification,
// continuous-time lattice distributions and their weak limits, all as
// reproducible CSV/JSON artifacts. Outputs are deterministic: identical
// configs produce byte-identical files.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "qwalk/csv.hpp"
#include "qwalk/ctqw.hpp"
#include "qwalk/dihedral.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/fft.hpp"
#include "qwalk/hamiltonian.hpp"
#include "qwalk/limits.hpp"
#include "qwalk/momentum.hpp"
#include "qwalk/version.hpp"

using json = nlohmann::json;
using namespace qwalk;

namespace {

struct CoinSpec {
  bool hadamard = false;
  std::vector<double> parts;  // a_re, a_im, b_re, b_im

  CoinParameters resolve() const {
    if (hadamard) return hadamard_coin();
    if (parts.empty())
      throw DomainError("no coin given: pass --hadamard or --coin a_re,a_im,b_re,b_im");
    if (parts.size() != 4)
      throw DomainError("--coin expects a_re,a_im,b_re,b_im (4 comma-separated reals)");
    return make_coin(cplx(parts[0], parts[1]), cplx(parts[2], parts[3]));
  }
  json echo() const {
    if (hadamard) return "hadamard";
    return parts;
  }
};

void add_coin_options(CLI::App* cmd, CoinSpec& spec) {
  auto* coin = cmd->add_option("--coin", spec.parts,
                               "coin entries a_re,a_im,b_re,b_im (SU(2), ab != 0)")
                   ->delimiter(',')
                   ->expected(4);
  cmd->add_flag("--hadamard", spec.hadamard, "use the Hadamard coin a = b = 1/sqrt(2)")
      ->excludes(coin);
}

ScalarSymbol resolve_symbol(const std::string& name, double s) {
  if (name == "psi0") return ScalarSymbol::psi0();
  if (name == "phi") {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("--symbol phi needs 0 < s < 1");
    return ScalarSymbol::phi(s);
  }
  if (name == "psi") {
    if (!(s >= 0.0 && s < 1.0)) throw DomainError("--symbol psi needs 0 <= s < 1");
    return ScalarSymbol::psi(s);
  }
  throw DomainError("unknown symbol '" + name + "' (expected phi, psi or psi0)");
}

void require_grid(int m) {
  if (!is_power_of_two(m) || m < 8 || m > (1 << 16))
    throw DomainError("--grid must be a power of two in [8, 65536]");
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DomainError("cannot open output file '" + path + "'");
  os << body;
}

void emit_report(const json& report, const std::string& path, bool to_stdout) {
  write_text_file(path, report.dump(2) + "\n");
  if (to_stdout) std::cout << report.dump(2) << std::endl;
}

json base_report(const std::string& command, const json& config) {
  return json{{"version", kVersion}, {"command", command}, {"config", config}};
}

// ---------------------------------------------------------------- kernel --

int run_kernel(const CoinSpec& coin_spec, int radius, double tol, const std::string& out,
               const std::string& i_out, const std::string& j_out,
               const std::string& report_path, bool to_stdout) {
  const CoinParameters coin = coin_spec.resolve();
  const HamiltonianKernel h = build_kernel(coin, radius, tol);

  std::ostringstream csv;
  write_kernel_csv(csv, h.kernel);
  write_text_file(out, csv.str());

  // optional dumps of the raw integral tables, x,re,im per row
  auto dump_table = [&](const std::string& path, const std::vector<cplx>& values) {
    CoefficientTable t;
    t.x_max = h.tables.x_max;
    t.coeff = values;
    std::ostringstream s;
    write_coefficients_csv(s, t);
    write_text_file(path, s.str());
  };
  if (!i_out.empty()) dump_table(i_out, h.tables.i_table);
  if (!j_out.empty()) dump_table(j_out, h.tables.j_table);

  const KernelInvariantReport inv = check_kernel_invariants(h);
  json report = base_report("kernel", {{"coin", coin_spec.echo()},
                                       {"radius", radius},
                                       {"tol", tol},
                                       {"out", out}});
  report["tail_bound"] = h.tail_bound;
  report["quadrature_bound"] = h.tables.quadrature_bound;
  report["decay_constant"] = h.decay.rate;
  report["invariants"] = {{"j_imag_max", inv.j_imag_max},
                          {"j_even_defect", inv.j_even_defect},
                          {"i_real_max", inv.i_real_max},
                          {"i_odd_defect", inv.i_odd_defect},
                          {"self_adjoint_defect", inv.self_adjoint_defect},
                          {"trace_max", inv.trace_max}};
  emit_report(report, report_path, to_stdout);
  return 0;
}

// ---------------------------------------------------------------- verify --

int run_verify(const CoinSpec& coin_spec, int grid_size, int window, int kernel_radius,
               double tol, const std::string& report_path, bool to_stdout) {
  require_grid(grid_size);
  const CoinParameters coin = coin_spec.resolve();
  const MomentumGrid grid(grid_size);

  const double residual_momentum =
      verify_exponential(coin, SpinorState::delta(window, 0, 0), grid);
  const double residual_position = verify_exponential_position(coin, 64, kernel_radius, tol);
  const double square_error = verify_square_identity(coin, 32, tol);
  const HamiltonianKernel h = build_kernel(coin, kernel_radius, tol);
  const double symbol_gap = kernel_vs_symbol_gap(h, tol);

  json report = base_report("verify", {{"coin", coin_spec.echo()},
                                       {"grid", grid_size},
                                       {"window", window},
                                       {"kernel_radius", kernel_radius},
                                       {"tol", tol}});
  report["residual_momentum"] = residual_momentum;
  report["residual_position"] = residual_position;
  report["square_identity_error"] = square_error;
  report["decay_constant"] = h.decay.rate;
  report["kernel_vs_symbol_max"] = symbol_gap;
  report["tail_bound"] = h.tail_bound;
  emit_report(report, report_path, to_stdout);
  return 0;
}

// ---------------------------------------------------------------- evolve --

int run_evolve(const CoinSpec& coin_spec, int steps, int window, const std::string& out,
               const std::string& report_path, bool to_stdout) {
  const CoinParameters coin = coin_spec.resolve();
  if (window <= 0) window = steps + 2;
  if (steps > window - 1)
    throw DomainError("steps must stay within the window: need window > steps");

  const SpinorState f = walk_evolve(coin, SpinorState::delta(window, 0, 0), steps);
  std::ostringstream csv;
  write_state_csv(csv, f);
  write_text_file(out, csv.str());

  json report = base_report("evolve", {{"coin", coin_spec.echo()},
                                       {"steps", steps},
                                       {"window", window},
                                       {"out", out}});
  report["norm"] = f.norm();
  report["norm_defect"] = std::abs(f.norm() - 1.0);
  emit_report(report, report_path, to_stdout);
  return 0;
}

// ------------------------------------------------------------------ ctqw --

int run_ctqw(const std::string& symbol, double s, double t, const std::string& out,
             const std::string& report_path, bool to_stdout) {
  if (!(t >= 0.0 && t <= 2000.0)) throw DomainError("--t must lie in [0, 2000]");
  const ScalarSymbol k = resolve_symbol(symbol, s);
  const LatticeDistribution d = distribution(k, t);

  std::ostringstream csv;
  write_distribution_csv(csv, d);
  write_text_file(out, csv.str());

  json report = base_report(
      "ctqw", {{"symbol", symbol}, {"s", s}, {"t", t}, {"out", out}});
  report["x_max"] = d.x_max;
  report["mass_deficit"] = d.mass_deficit;
  emit_report(report, report_path, to_stdout);
  return 0;
}

// ---------------------------------------------------------------- limits --

int run_limits(const std::string& symbol, double s, double t, std::vector<double> xi,
               const std::string& out, const std::string& report_path, bool to_stdout) {
  if (!(t > 0.0 && t <= 2000.0)) throw DomainError("--t must lie in (0, 2000]");
  if (xi.empty()) xi = {1.0, 2.0, 5.0};
  const ScalarSymbol k = resolve_symbol(symbol, s);
  const LimitDensity density = (symbol == "psi0")  ? LimitDensity::arcsine()
                               : (symbol == "phi") ? LimitDensity::konno_phi(s)
                                                   : LimitDensity::konno_psi(s);

  const LatticeDistribution d = distribution(k, t);
  std::ostringstream csv;
  write_distribution_csv(csv, d);
  write_text_file(out, csv.str());

  const double ks = ks_distance(d, density);
  std::vector<double> char_gaps;
  double dual_max = 0.0;
  for (double q : xi) {
    char_gaps.push_back(std::abs(empirical_char(k, t, q, &d) - limit_char(k, q)));
    dual_max = std::max(dual_max, dual_route_gap(k, t, q, &d));
  }

  json report = base_report("limits", {{"symbol", symbol},
                                       {"s", s},
                                       {"t", t},
                                       {"xi", xi},
                                       {"out", out}});
  report["ks"] = ks;
  report["char_gaps"] = char_gaps;
  report["dual_route_max_gap"] = dual_max;
  report["mass_deficit"] = d.mass_deficit;
  emit_report(report, report_path, to_stdout);
  return 0;
}

// ---------------------------------------------------------------- charfn --

int run_charfn(const std::string& symbol, double s, double t, std::vector<double> xi,
               const std::string& out, const std::string& report_path, bool to_stdout) {
  if (!(t > 0.0 && t <= 2000.0)) throw DomainError("--t must lie in (0, 2000]");
  if (xi.empty()) xi = {1.0, 2.0, 5.0};
  if (xi.size() > 64) throw DomainError("at most 64 xi samples");
  const ScalarSymbol k = resolve_symbol(symbol, s);
  const LatticeDistribution d = distribution(k, t);

  std::ostringstream csv;
  csv << "xi,re,im\n";
  json values = json::array();
  for (double q : xi) {
    const cplx e = empirical_char(k, t, q, &d);
    const double gap = dual_route_gap(k, t, q, &d);
    csv << format_double(q) << ',' << format_double(e.real()) << ','
        << format_double(e.imag()) << '\n';
    values.push_back({{"xi", q},
                      {"re", e.real()},
                      {"im", e.imag()},
                      {"dual_route_gap", gap},
                      {"limit_re", limit_char(k, q).real()}});
  }
  write_text_file(out, csv.str());

  json report = base_report(
      "charfn", {{"symbol", symbol}, {"s", s}, {"t", t}, {"xi", xi}, {"out", out}});
  report["values"] = values;
  emit_report(report, report_path, to_stdout);
  return 0;
}

// -------------------------------------------------------------- spectrum --

int run_spectrum(const CoinSpec& coin_spec, int grid_size, const std::string& out,
                 const std::string& symbol_out, const std::string& report_path,
                 bool to_stdout) {
  require_grid(grid_size);
  const CoinParameters coin = coin_spec.resolve();
  const SpectrumIntervals sp = spectrum_intervals(coin);
  const MomentumGrid grid(grid_size);

  if (!symbol_out.empty()) {
    std::ostringstream s;
    write_symbol_csv(s, generator_symbol(coin, grid));
    write_text_file(symbol_out, s.str());
  }

  std::ostringstream csv;
  csv << "theta,lambda_plus,lambda_minus\n";
  double lo = 10.0, hi = -10.0;
  bool inside = true;
  for (int j = 0; j < grid.size; ++j) {
    const double phi = eval_phi(coin.s, grid.node(j) + coin.mu);
    lo = std::min(lo, phi);
    hi = std::max(hi, phi);
    inside = inside && sp.contains(phi, 1e-12) && sp.contains(-phi, 1e-12);
    csv << format_double(grid.node(j)) << ',' << format_double(phi) << ','
        << format_double(-phi) << '\n';
  }
  write_text_file(out, csv.str());

  json report = base_report("spectrum", {{"coin", coin_spec.echo()}, {"grid", grid_size}});
  report["intervals"] = {{"negative", {sp.neg_lo, sp.neg_hi}},
                         {"positive", {sp.pos_lo, sp.pos_hi}}};
  report["grid_min_eigenvalue"] = lo;
  report["grid_max_eigenvalue"] = hi;
  report["endpoint_gap_low"] = lo - sp.pos_lo;
  report["endpoint_gap_high"] = sp.pos_hi - hi;
  report["all_grid_eigenvalues_inside"] = inside;
  emit_report(report, report_path, to_stdout);
  return 0;
}

// -------------------------------------------------------------- dihedral --

int run_dihedral(const CoinSpec& coin_spec, int radius, const std::string& report_path,
                 bool to_stdout) {
  const CoinParameters coin = coin_spec.resolve();

  const RelationReport mat = check_qw_relations(v_matrix(coin.alpha), w_matrix(coin.beta));
  const RelationReport lat = check_qw_relations_lattice(coin.alpha, coin.beta, radius + 4);
  double cheb = 0.0;
  for (int n = 0; n <= 20; ++n) {
    cheb = std::max(cheb, chebyshev_power(v_matrix(coin.alpha), w_matrix(coin.beta), coin.s,
                                          coin.r, n));
    if (n <= 12)
      cheb = std::max(cheb,
                      chebyshev_power_lattice(coin.alpha, coin.beta, coin.s, coin.r, n, 4));
  }
  const double inter = verify_equivalence(coin, radius);

  json report = base_report("dihedral", {{"coin", coin_spec.echo()}, {"radius", radius}});
  report["qw1"] = std::max(mat.qw1, lat.qw1);
  report["qw2"] = std::max(mat.qw2, lat.qw2);
  report["chebyshev_max"] = cheb;
  report["intertwiner_max"] = inter;
  emit_report(report, report_path, to_stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-dimensional quantum walk Hamiltonians and limit laws"};
  app.require_subcommand(1);
  bool to_stdout = false;
  app.add_flag("--json", to_stdout, "print the JSON report to stdout as well");

  // kernel
  auto* kernel = app.add_subcommand("kernel", "build the Hamiltonian kernel D_T");
  CoinSpec kernel_coin;
  add_coin_options(kernel, kernel_coin);
  int kernel_radius = 48;
  double kernel_tol = 1e-10;
  std::string kernel_out = "kernel.csv", kernel_report = "kernel_report.json";
  std::string kernel_i_out, kernel_j_out;
  kernel->add_option("--radius", kernel_radius, "kernel radius K")->check(CLI::Range(2, 512));
  kernel->add_option("--tol", kernel_tol, "certified tolerance")
      ->check(CLI::Range(1e-14, 1e-2));
  kernel->add_option("--out", kernel_out, "kernel CSV path");
  kernel->add_option("--i-out", kernel_i_out, "optional I(x) table CSV path");
  kernel->add_option("--j-out", kernel_j_out, "optional J(x) table CSV path");
  kernel->add_option("--report", kernel_report, "JSON report path");

  // verify
  auto* verify = app.add_subcommand("verify", "verify U(T) = e^{iD(T)} both ways");
  CoinSpec verify_coin;
  add_coin_options(verify, verify_coin);
  int verify_grid = 1024, verify_window = 128, verify_kradius = 48;
  double verify_tol = 1e-10;
  std::string verify_report = "verify_report.json";
  verify->add_option("--grid", verify_grid, "momentum grid size (power of two)");
  verify->add_option("--window", verify_window, "lattice window radius")
      ->check(CLI::Range(8, 4096));
  verify->add_option("--kernel-radius", verify_kradius, "kernel radius for the position route")
      ->check(CLI::Range(16, 512));
  verify->add_option("--tol", verify_tol, "certified tolerance")
      ->check(CLI::Range(1e-14, 1e-2));
  verify->add_option("--report", verify_report, "JSON report path");

  // evolve
  auto* evolve = app.add_subcommand("evolve", "run the coined walk from delta_0 e1");
  CoinSpec evolve_coin;
  add_coin_options(evolve, evolve_coin);
  int evolve_steps = 10, evolve_window = 0;
  std::string evolve_out = "state.csv", evolve_report = "evolve_report.json";
  evolve->add_option("--steps", evolve_steps, "number of walk steps")
      ->check(CLI::Range(0, 4000));
  evolve->add_option("--window", evolve_window, "window radius (default steps + 2)")
      ->check(CLI::Range(1, 4096));
  evolve->add_option("--out", evolve_out, "state CSV path");
  evolve->add_option("--report", evolve_report, "JSON report path");

  // ctqw
  auto* ctqw = app.add_subcommand("ctqw", "continuous-time distribution p_t(k; x)");
  std::string ctqw_symbol = "psi0";
  double ctqw_s = 0.0, ctqw_t = 100.0;
  std::string ctqw_out = "dist.csv", ctqw_report = "ctqw_report.json";
  ctqw->add_option("--symbol", ctqw_symbol, "phi | psi | psi0");
  ctqw->add_option("--s", ctqw_s, "symbol parameter s")->check(CLI::Range(0.0, 0.999));
  ctqw->add_option("--t", ctqw_t, "evolution time");
  ctqw->add_option("--out", ctqw_out, "distribution CSV path");
  ctqw->add_option("--report", ctqw_report, "JSON report path");

  // limits
  auto* limits = app.add_subcommand("limits", "weak-limit comparison at finite t");
  std::string limits_symbol = "psi0";
  double limits_s = 0.0, limits_t = 500.0;
  std::vector<double> limits_xi;
  std::string limits_out = "dist.csv", limits_report = "limits_report.json";
  limits->add_option("--symbol", limits_symbol, "phi | psi | psi0");
  limits->add_option("--s", limits_s, "symbol parameter s")->check(CLI::Range(0.0, 0.999));
  limits->add_option("--t", limits_t, "evolution time");
  limits->add_option("--xi", limits_xi, "characteristic-function samples")->delimiter(',');
  limits->add_option("--out", limits_out, "distribution CSV path");
  limits->add_option("--report", limits_report, "JSON report path");

  // charfn
  auto* charfn = app.add_subcommand("charfn", "empirical characteristic function E_t");
  std::string charfn_symbol = "psi0";
  double charfn_s = 0.0, charfn_t = 100.0;
  std::vector<double> charfn_xi;
  std::string charfn_out = "charfn.csv", charfn_report = "charfn_report.json";
  charfn->add_option("--symbol", charfn_symbol, "phi | psi | psi0");
  charfn->add_option("--s", charfn_s, "symbol parameter s")->check(CLI::Range(0.0, 0.999));
  charfn->add_option("--t", charfn_t, "evolution time");
  charfn->add_option("--xi", charfn_xi, "xi samples, comma separated")->delimiter(',');
  charfn->add_option("--out", charfn_out, "CSV path");
  charfn->add_option("--report", charfn_report, "JSON report path");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "spectral bands of D(T)");
  CoinSpec spectrum_coin;
  add_coin_options(spectrum, spectrum_coin);
  int spectrum_grid = 4096;
  std::string spectrum_out = "spectrum.csv", spectrum_report = "spectrum_report.json";
  std::string spectrum_symbol_out;
  spectrum->add_option("--grid", spectrum_grid, "momentum grid size (power of two)");
  spectrum->add_option("--out", spectrum_out, "eigenvalue-curve CSV path");
  spectrum->add_option("--symbol-out", spectrum_symbol_out,
                       "optional generator-symbol CSV path (theta, 8 floats)");
  spectrum->add_option("--report", spectrum_report, "JSON report path");

  // dihedral
  auto* dihedral = app.add_subcommand("dihedral", "infinite dihedral group checks");
  CoinSpec dihedral_coin;
  add_coin_options(dihedral, dihedral_coin);
  int dihedral_radius = 16;
  std::string dihedral_report = "dihedral.json";
  dihedral->add_option("--radius", dihedral_radius, "basis block radius")
      ->check(CLI::Range(2, 64));
  dihedral->add_option("--report", dihedral_report, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    const json err = {{"error", {{"code", "InvalidArguments"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << std::endl;
    return 1;
  }

  try {
    if (kernel->parsed())
      return run_kernel(kernel_coin, kernel_radius, kernel_tol, kernel_out, kernel_i_out,
                        kernel_j_out, kernel_report, to_stdout);
    if (verify->parsed())
      return run_verify(verify_coin, verify_grid, verify_window, verify_kradius, verify_tol,
                        verify_report, to_stdout);
    if (evolve->parsed())
      return run_evolve(evolve_coin, evolve_steps, evolve_window, evolve_out, evolve_report,
                        to_stdout);
    if (ctqw->parsed())
      return run_ctqw(ctqw_symbol, ctqw_s, ctqw_t, ctqw_out, ctqw_report, to_stdout);
    if (limits->parsed())
      return run_limits(limits_symbol, limits_s, limits_t, limits_xi, limits_out,
                        limits_report, to_stdout);
    if (charfn->parsed())
      return run_charfn(charfn_symbol, charfn_s, charfn_t, charfn_xi, charfn_out,
                        charfn_report, to_stdout);
    if (spectrum->parsed())
      return run_spectrum(spectrum_coin, spectrum_grid, spectrum_out, spectrum_symbol_out,
                          spectrum_report, to_stdout);
    if (dihedral->parsed())
      return run_dihedral(dihedral_coin, dihedral_radius, dihedral_report, to_stdout);
  } catch (const ResolutionTooLowError& e) {
    const json err = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
    std::cout << err.dump(2) << std::endl;
    return 2;
  } catch (const TailNotConvergedError& e) {
    const json err = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
    std::cout << err.dump(2) << std::endl;
    return 2;
  } catch (const Error& e) {
    const json err = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
    std::cout << err.dump(2) << std::endl;
    return 1;
  }
  return 0;
}
