#include "xxzge/sweep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "xxzge/errors.hpp"

namespace xxzge {

namespace {

Eigen::Vector2cd random_local(std::mt19937_64& rng) {
  // Box-Muller on raw 64-bit draws keeps the stream layout fixed across
  // standard library implementations.
  auto uniform = [&rng]() {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  auto gauss_pair = [&]() {
    const double u = uniform();
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double t = 2.0 * std::numbers::pi * v;
    return std::pair<double, double>{r * std::cos(t), r * std::sin(t)};
  };
  const auto [a, b] = gauss_pair();
  const auto [c, d] = gauss_pair();
  Eigen::Vector2cd v;
  v << Complex(a, b), Complex(c, d);
  const double n = v.norm();
  if (n == 0.0) {
    v << 1.0, 0.0;
    return v;
  }
  return v / n;
}

void validate(const SweepOptions& opts) {
  if (opts.max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (opts.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (!(opts.degenerate_norm_floor > 0.0))
    throw std::invalid_argument("degenerate_norm_floor must be positive");
}

}  // namespace

Eigen::Vector2cd conditional_local(const StateVector& g, const ProductState& psi,
                                   int site) {
  if (psi.n_sites != g.n_sites)
    throw std::invalid_argument("conditional_local: site counts differ");
  if (site < 1 || site > g.n_sites)
    throw std::domain_error("conditional_local: site index out of range");

  const int n = g.n_sites;
  const std::size_t dim = dimension(n);
  Eigen::Vector2cd v = Eigen::Vector2cd::Zero();
  for (std::size_t b = 0; b < dim; ++b) {
    Complex c = g.amplitudes(static_cast<Eigen::Index>(b));
    if (c == 0.0) continue;
    for (int j = 1; j <= n; ++j) {
      if (j == site) continue;
      c *= std::conj(psi.locals[j - 1](bit_at(b, n, j)));
    }
    v(bit_at(b, n, site)) += c;
  }
  return v;
}

ProductState random_product_state(int n_sites, std::mt19937_64& rng) {
  if (n_sites < 1) throw std::domain_error("random_product_state: need n_sites >= 1");
  ProductState psi;
  psi.n_sites = n_sites;
  psi.locals.resize(n_sites);
  for (auto& local : psi.locals) local = random_local(rng);
  return psi;
}

SweepRound sweep_round(const StateVector& g, const ProductState& psi,
                       std::mt19937_64& rng, double degenerate_norm_floor) {
  const int n = g.n_sites;
  SweepRound out;
  out.psi = psi;
  out.step_lambdas.reserve(2 * n - 2);

  auto update_site = [&](int site) {
    const Eigen::Vector2cd v = conditional_local(g, out.psi, site);
    const double norm = v.norm();
    if (norm < degenerate_norm_floor) {
      // overlap is numerically dead at this site; restart it
      out.psi.locals[site - 1] = random_local(rng);
      out.step_lambdas.push_back(std::abs(overlap(out.psi, g)));
    } else {
      out.psi.locals[site - 1] = v / norm;
      // with the optimal local in place the overlap equals the norm
      out.step_lambdas.push_back(norm);
    }
  };

  for (int site = 1; site <= n; ++site) update_site(site);
  for (int site = n - 1; site >= 2; --site) update_site(site);

  out.lambda = out.step_lambdas.back();
  return out;
}

GEResult max_overlap(const StateVector& g, const SweepOptions& opts) {
  validate(opts);
  if (g.n_sites < 2) throw std::domain_error("max_overlap: need n_sites >= 2");
  if (std::abs(g.amplitudes.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("max_overlap: state vector is not normalized");

  auto run_restart = [&](int restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.rng_seed),
                      static_cast<std::uint32_t>(opts.rng_seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);

    ProductState psi = random_product_state(g.n_sites, rng);
    double lambda = std::abs(overlap(psi, g));

    SweepTrace trace;
    for (int round = 1; round <= opts.max_rounds; ++round) {
      SweepRound r = sweep_round(g, psi, rng, opts.degenerate_norm_floor);
      psi = std::move(r.psi);
      trace.lambda_per_step.insert(trace.lambda_per_step.end(),
                                   r.step_lambdas.begin(), r.step_lambdas.end());
      trace.rounds_used = round;
      if (std::abs(r.lambda - lambda) < opts.tol) {
        trace.converged = true;
        lambda = r.lambda;
        break;
      }
      lambda = r.lambda;
    }

    GEResult res;
    res.lambda_max = lambda;
    res.closest = std::move(psi);
    res.trace = std::move(trace);
    return res;
  };

  // Restarts that land within tol of the top overlap found the same maximum;
  // among those, keep the one that settled in the fewest rounds so the trace
  // reflects the ascent rather than the luck of the restart ordering (an
  // unlucky start can idle near a saddle for several rounds first).
  std::vector<std::pair<double, int>> runs;
  runs.reserve(static_cast<std::size_t>(opts.restarts));
  double top = -1.0;
  for (int restart = 0; restart < opts.restarts; ++restart) {
    const GEResult res = run_restart(restart);
    runs.emplace_back(res.lambda_max, res.trace.rounds_used);
    top = std::max(top, res.lambda_max);
  }
  int winner = -1;
  for (int r = 0; r < opts.restarts; ++r) {
    if (runs[static_cast<std::size_t>(r)].first < top - opts.tol) continue;
    if (winner < 0 || runs[static_cast<std::size_t>(r)].second <
                          runs[static_cast<std::size_t>(winner)].second)
      winner = r;
  }

  GEResult best = run_restart(winner);
  best.e_log2 = geometric_entanglement(best.lambda_max);
  return best;
}

double geometric_entanglement(double lambda) {
  if (lambda <= 0.0)
    throw InfiniteEntanglementError(
        "geometric_entanglement: overlap must be positive");
  if (lambda > 1.0 + 1e-9)
    throw std::domain_error("geometric_entanglement: overlap exceeds 1");
  if (lambda > 1.0) lambda = 1.0;
  return -2.0 * std::log2(lambda) + 0.0;  // +0.0 normalizes -0
}

}  // namespace xxzge
