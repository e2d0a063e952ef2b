#pragma once

// Alternating maximization of |<Psi|g>| over product states Psi.
//
// One step fixes every site but one; the conditional overlap vector for the
// free site is then the exact local optimum, so the overlap modulus is
// non-decreasing along the sweep. Several randomized restarts guard against
// local maxima.

#include <random>

#include "xxzge/state.hpp"

namespace xxzge {

struct SweepOptions {
  int max_rounds = 200;
  double tol = 1e-12;          // per-round |d lambda| convergence threshold
  int restarts = 8;
  std::uint64_t rng_seed = 0;
  double degenerate_norm_floor = 1e-14;
};

struct SweepTrace {
  std::vector<double> lambda_per_step;
  int rounds_used = 0;
  bool converged = false;
};

struct GEResult {
  double lambda_max = 0.0;   // max |<Psi|g>| found
  double e_log2 = 0.0;       // -log2(lambda_max^2)
  ProductState closest;
  SweepTrace trace;          // trace of the best restart
};

// Unnormalized conditional overlap vector v_q = <Psi_(site=q)|g> obtained by
// contracting every site except `site` (1-based).
Eigen::Vector2cd conditional_local(const StateVector& g, const ProductState& psi,
                                   int site);

// Haar-like random product state: per-site complex Gaussian spinor,
// normalized.
ProductState random_product_state(int n_sites, std::mt19937_64& rng);

struct SweepRound {
  ProductState psi;
  double lambda = 0.0;               // |<Psi|g>| after the round
  std::vector<double> step_lambdas;  // one entry per site update (2N - 2)
};

// One full sweep: sites 1..N then N-1..2. A site whose conditional norm
// falls below degenerate_norm_floor is re-randomized instead of updated.
SweepRound sweep_round(const StateVector& g, const ProductState& psi,
                       std::mt19937_64& rng, double degenerate_norm_floor = 1e-14);

// Best product-state overlap over opts.restarts seeded starts.
GEResult max_overlap(const StateVector& g, const SweepOptions& opts = {});

// E = -log2(lambda^2). Domain (0, 1]; values within 1e-9 above 1 are
// clamped as rounding noise.
double geometric_entanglement(double lambda);

}  // namespace xxzge
