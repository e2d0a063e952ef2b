// Command-line front end: gamma scans, single GE solves, beta profiles and
// transition detection for the periodic XXZ chain.

#include <clocale>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xxzge/closed_form.hpp"
#include "xxzge/errors.hpp"
#include "xxzge/hamiltonian.hpp"
#include "xxzge/scan.hpp"
#include "xxzge/sweep.hpp"

namespace {

using namespace xxzge;

struct Options {
  int n_sites = 4;
  double gamma_min = -2.0;
  double gamma_max = 3.0;
  double gamma_step = 0.05;
  double gamma = 0.0;
  int beta_steps = 64;
  double decay2 = 1.0;
  double decay3 = 1.0;
  bool decay_given = false;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Empty path means standard output.
int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return 2;
  }
  file << text;
  file.flush();
  if (!file) {
    std::cerr << "error: write to '" << path << "' failed\n";
    return 2;
  }
  return 0;
}

char separator(const Options& opt) { return opt.format == "tsv" ? '\t' : ','; }

std::string render_table(const ScanTable& table, char sep) {
  std::ostringstream os;
  os << "gamma" << sep << "e_g" << sep << "lambda1_sq" << sep << "lambda2_sq"
     << sep << "lambda3_sq" << sep << "lambda_max_sq" << sep << "e_log2" << "\n";
  for (const auto& r : table.rows) {
    os << fmt(r.gamma) << sep << fmt(r.e_g) << sep << fmt(r.lambda1_sq) << sep
       << fmt(r.lambda2_sq) << sep << fmt(r.lambda3_sq) << sep
       << fmt(r.lambda_max_sq) << sep << fmt(r.e_log2) << "\n";
  }
  return os.str();
}

int check_common(const Options& opt) {
  if (opt.n_sites < 2 || opt.n_sites % 2 != 0) {
    std::cerr << "error: --n-sites must be an even integer >= 2\n";
    return 1;
  }
  return 0;
}

std::vector<double> build_grid(const Options& opt) {
  bool shifted = false;
  auto grid = make_gamma_grid(opt.gamma_min, opt.gamma_max, opt.gamma_step, &shifted);
  if (shifted)
    std::cerr << "note: grid point at gamma=-1 offset to -1 -/+ step/2\n";
  return grid;
}

SweepOptions sweep_options(const Options& opt) {
  SweepOptions sw;
  sw.rng_seed = opt.seed;
  return sw;
}

int cmd_scan(const Options& opt) {
  if (int rc = check_common(opt)) return rc;
  const auto grid = build_grid(opt);
  if (grid.empty()) {
    std::cerr << "error: empty gamma grid\n";
    return 1;
  }
  const ScanTable table = gamma_scan(grid, opt.n_sites, sweep_options(opt));
  return emit(render_table(table, separator(opt)), opt.out);
}

int cmd_ge(const Options& opt) {
  if (int rc = check_common(opt)) return rc;
  const GroundSolution sol =
      ground_state(opt.n_sites, opt.gamma, default_b_z(opt.gamma));
  const GEResult ge = max_overlap(sol.state, sweep_options(opt));

  std::ostringstream os;
  os << "gamma=" << fmt(opt.gamma) << "\n"
     << "e_g=" << fmt(sol.energy) << "\n"
     << "lambda_max_sq=" << fmt(ge.lambda_max * ge.lambda_max) << "\n"
     << "e_log2=" << fmt(ge.e_log2) << "\n"
     << "rounds_used=" << ge.trace.rounds_used << "\n"
     << "converged=" << (ge.trace.converged ? "true" : "false") << "\n";
  for (int site = 1; site <= opt.n_sites; ++site) {
    const auto& v = ge.closest.locals[site - 1];
    os << "closest_site_" << site << "=(" << fmt(v(0).real()) << ","
       << fmt(v(0).imag()) << ") (" << fmt(v(1).real()) << "," << fmt(v(1).imag())
       << ")\n";
  }
  return emit(os.str(), opt.out);
}

int cmd_beta(const Options& opt) {
  if (int rc = check_common(opt)) return rc;
  if (opt.beta_steps < 2) {
    std::cerr << "error: --beta-steps must be >= 2\n";
    return 1;
  }
  std::vector<double> grid(opt.beta_steps);
  for (int k = 0; k < opt.beta_steps; ++k)
    grid[k] = std::numbers::pi * k / (opt.beta_steps - 1);

  const BetaScan scan = beta_scan(opt.gamma, grid, opt.n_sites);
  const char sep = separator(opt);
  std::ostringstream os;
  os << "beta" << sep << "lambda_sq" << "\n";
  for (const auto& p : scan.points)
    os << fmt(p.beta) << sep << fmt(p.lambda_sq) << "\n";
  return emit(os.str(), opt.out);
}

// Rows with 0.5 <= gamma <= 1.5 feed the crossing fits.
Curve window_curve(const ScanTable& table, double ScanRow::* column) {
  Curve c;
  for (const auto& r : table.rows) {
    if (r.gamma < 0.5 || r.gamma > 1.5) continue;
    c.x.push_back(r.gamma);
    c.y.push_back(r.*column);
  }
  return c;
}

int cmd_detect(const Options& opt) {
  if (int rc = check_common(opt)) return rc;
  const auto grid = build_grid(opt);
  if (grid.size() < 2) {
    std::cerr << "error: need at least two grid points\n";
    return 1;
  }
  const ScanTable table = gamma_scan(grid, opt.n_sites, sweep_options(opt));

  std::ostringstream os;
  const double jump = detect_jump(table, 0.5);
  os << "jump_gamma=" << fmt(jump) << "\n";

  const CrossingResult plain = detect_crossing(
      window_curve(table, &ScanRow::lambda2_sq),
      window_curve(table, &ScanRow::lambda3_sq));
  os << "crossing_gamma=" << fmt(plain.x) << "\n"
     << "crossing_sign_changes=" << plain.sign_changes << "\n";

  if (opt.decay_given) {
    const DecayModel model{opt.decay2, opt.decay3};
    const ScanTable decayed = apply_decay(table, model);
    const CrossingResult moved = detect_crossing(
        window_curve(decayed, &ScanRow::lambda2_sq),
        window_curve(decayed, &ScanRow::lambda3_sq));
    os << "crossing_gamma_decayed=" << fmt(moved.x) << "\n";

    const ScanTable restored = remove_decay(decayed, model);
    const CrossingResult back = detect_crossing(
        window_curve(restored, &ScanRow::lambda2_sq),
        window_curve(restored, &ScanRow::lambda3_sq));
    os << "crossing_gamma_rescaled=" << fmt(back.x) << "\n";
  }
  return emit(os.str(), opt.out);
}

template <typename F>
int run_guarded(F&& body) {
  try {
    return body();
  } catch (const NoCrossingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NoJumpError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const FitError& e) {
    // not enough usable rows around the feature
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");

  CLI::App app{"Ground-state geometric entanglement of the periodic XXZ chain"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n-sites", opt.n_sites, "Chain length (even)")
        ->capture_default_str();
    cmd->add_option("--seed", opt.seed, "RNG seed for the overlap sweeps")
        ->capture_default_str();
    cmd->add_option("--out", opt.out, "Output path (default: stdout)");
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "tsv"}))
        ->capture_default_str();
  };
  auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--gamma-min", opt.gamma_min, "Grid start")->capture_default_str();
    cmd->add_option("--gamma-max", opt.gamma_max, "Grid end")->capture_default_str();
    cmd->add_option("--gamma-step", opt.gamma_step, "Grid step")->capture_default_str();
  };

  CLI::App* scan = app.add_subcommand("scan", "Scan GE and overlaps over a gamma grid");
  add_common(scan);
  add_grid(scan);

  CLI::App* ge = app.add_subcommand("ge", "Maximal product overlap at one gamma");
  add_common(ge);
  ge->add_option("--gamma", opt.gamma, "Anisotropy")->required();

  CLI::App* beta = app.add_subcommand("beta", "Overlap of rotated alternating states");
  add_common(beta);
  beta->add_option("--gamma", opt.gamma, "Anisotropy")->required();
  beta->add_option("--beta-steps", opt.beta_steps, "Points on [0, pi]")
      ->capture_default_str();

  CLI::App* detect = app.add_subcommand("detect", "Locate the jump and the crossing");
  add_common(detect);
  add_grid(detect);
  auto* d2 = detect->add_option("--decay2", opt.decay2,
                                "Decay factor on the +-+- overlap channel");
  auto* d3 = detect->add_option("--decay3", opt.decay3,
                                "Decay factor on the 0101 overlap channel");
  d2->needs(d3);
  d3->needs(d2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  opt.decay_given = d2->count() > 0 && d3->count() > 0;

  if (scan->parsed()) return run_guarded([&] { return cmd_scan(opt); });
  if (ge->parsed()) return run_guarded([&] { return cmd_ge(opt); });
  if (beta->parsed()) return run_guarded([&] { return cmd_beta(opt); });
  if (detect->parsed()) return run_guarded([&] { return cmd_detect(opt); });
  return 1;
}
