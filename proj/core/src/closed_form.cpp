#include "xxzge/closed_form.hpp"

#include <cmath>

#include "xxzge/errors.hpp"

namespace xxzge {

namespace {

constexpr int kSites = 4;
constexpr double kRoot2 = 1.4142135623730950488;

// Basis indices of the two momentum-0 S_z = 0 combinations.
constexpr int kPhi1[] = {5, 10};           // |0101>, |1010>
constexpr int kPhi2[] = {12, 3, 9, 6};     // |1100>, |0011>, |1001>, |0110>

void require_off_branch_point(double gamma) {
  if (gamma == -1.0)
    throw BranchAmbiguityError(
        "gamma = -1 is the first-order branch point; no closed form applies");
}

}  // namespace

double eg_closed(double gamma) {
  if (gamma <= -1.0) return 4.0 * gamma;
  return -2.0 * gamma - 2.0 * std::sqrt(gamma * gamma + 8.0);
}

double alpha_of_gamma(double gamma) {
  if (gamma <= -1.0)
    throw std::domain_error("alpha_of_gamma: defined only for gamma > -1");
  return -0.5 * std::atan2(2.0 * kRoot2, gamma);
}

OverlapTriple overlaps_closed(double gamma) {
  require_off_branch_point(gamma);
  OverlapTriple t;
  if (gamma < -1.0) {
    t.lambda1 = 1.0;
    t.lambda2 = 0.25;
    t.lambda3 = 0.0;
  } else {
    const double a = alpha_of_gamma(gamma);
    t.lambda1 = 0.0;
    t.lambda2 = (kRoot2 / 4.0) * std::cos(a) - 0.5 * std::sin(a);
    t.lambda3 = std::cos(a) / kRoot2;
  }
  return t;
}

StateVector ground_state_closed(double gamma, bool zeeman_lifted) {
  require_off_branch_point(gamma);
  StateVector g;
  g.n_sites = kSites;
  g.amplitudes = Eigen::VectorXcd::Zero(16);

  if (gamma < -1.0) {
    if (!zeeman_lifted)
      throw DegenerateGroundError(
          "ground_state_closed: polarized doublet is degenerate at b_z = 0");
    g.amplitudes(15) = 1.0;  // |1111>
    return g;
  }

  const double a = alpha_of_gamma(gamma);
  for (int b : kPhi1) g.amplitudes(b) = std::cos(a) / kRoot2;
  for (int b : kPhi2) g.amplitudes(b) = std::sin(a) / 2.0;
  return g;
}

}  // namespace xxzge
