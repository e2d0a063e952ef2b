#pragma once

// Phase-transition scans: geometric entanglement across the gamma axis,
// overlap profiles along the beta family U_p(beta)|0101...>, emulated
// measurement decay, polynomial fits, and the two detectors (first-order
// jump, overlap crossing).

#include <vector>

#include "xxzge/sweep.hpp"

namespace xxzge {

// Longitudinal field used to lift the polarized doublet for gamma < -1.
inline constexpr double kZeemanLift = 1e-3;

inline double default_b_z(double gamma) { return gamma < -1.0 ? kZeemanLift : 0.0; }

struct ScanRow {
  double gamma = 0.0;
  double e_g = 0.0;
  double lambda1_sq = 0.0;  // |<11...1|g>|^2
  double lambda2_sq = 0.0;  // |<+-+-...|g>|^2
  double lambda3_sq = 0.0;  // |<0101...|g>|^2
  double lambda_max_sq = 0.0;
  double e_log2 = 0.0;
};

struct ScanTable {
  std::vector<ScanRow> rows;
};

struct BetaPoint {
  double beta = 0.0;
  double lambda_sq = 0.0;
};

struct BetaScan {
  double gamma = 0.0;
  std::vector<BetaPoint> points;
};

// Multiplicative emulation of measurement decay on the two overlap
// channels; factors must lie in (0, 1].
struct DecayModel {
  double alpha2 = 1.0;
  double alpha3 = 1.0;
};

struct PolyFit {
  int degree = 0;
  std::vector<double> coefficients;  // ascending powers
  double rss = 0.0;
};

struct Curve {
  std::vector<double> x;
  std::vector<double> y;
};

struct CrossingResult {
  double x = 0.0;
  int sign_changes = 0;  // bracketed roots of the fitted difference
};

// Uniform grid gmin, gmin+step, ... capped at gmax (inclusive within
// step*1e-9). A point falling on -1 (within 1e-12) is replaced by the pair
// -1 -/+ step/2; *shifted reports whether that happened.
std::vector<double> make_gamma_grid(double gamma_min, double gamma_max,
                                    double step, bool* shifted = nullptr);

// Ground state and overlaps per gamma (b_z = kZeemanLift below -1, else 0).
// The grid must be strictly increasing and avoid -1.
ScanTable gamma_scan(const std::vector<double>& gamma_grid, int n_sites,
                     const SweepOptions& opts = {});

// lambda_sq(beta) = |<U_p(beta) 0101...|g(gamma)>|^2 over beta_grid.
BetaScan beta_scan(double gamma, const std::vector<double>& beta_grid,
                   int n_sites);

ScanTable apply_decay(ScanTable table, const DecayModel& model);
ScanTable remove_decay(ScanTable table, const DecayModel& model);

// Ordinary least squares on a Vandermonde basis, coefficients in ascending
// powers. Needs degree+1 distinct x values.
PolyFit fit_polynomial(const Curve& pts, int degree);

double polyval(const PolyFit& fit, double x);

// Fit both curves on their common x range and locate the sign change of the
// fitted difference by bisection. Multiple brackets are reported via
// sign_changes; x is the crossing nearest the middle of the range.
CrossingResult detect_crossing(const Curve& a, const Curve& b, int degree = 3);

// Midpoint of the first adjacent gamma pair whose |delta e_log2| exceeds
// the threshold.
double detect_jump(const ScanTable& table, double threshold = 0.5);

}  // namespace xxzge
