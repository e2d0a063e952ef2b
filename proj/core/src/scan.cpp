#include "xxzge/scan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xxzge/errors.hpp"
#include "xxzge/hamiltonian.hpp"

namespace xxzge {

namespace {

void check_even_sites(int n_sites, const char* who) {
  if (n_sites < 2 || n_sites % 2 != 0)
    throw std::domain_error(std::string(who) + ": need an even n_sites >= 2");
}

void check_decay(const DecayModel& m) {
  const bool ok2 = m.alpha2 > 0.0 && m.alpha2 <= 1.0;
  const bool ok3 = m.alpha3 > 0.0 && m.alpha3 <= 1.0;
  if (!ok2 || !ok3)
    throw std::domain_error("decay factors must lie in (0, 1]");
}

double sq(double x) { return x * x; }

}  // namespace

std::vector<double> make_gamma_grid(double gamma_min, double gamma_max,
                                    double step, bool* shifted) {
  if (!(step > 0.0)) throw std::domain_error("make_gamma_grid: step must be positive");
  if (shifted) *shifted = false;

  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double x = gamma_min + k * step;
    if (x > gamma_max + step * 1e-9) break;
    if (std::abs(x + 1.0) < 1e-12) {
      // split the branch point into a straddling pair
      grid.push_back(-1.0 - step / 2.0);
      grid.push_back(-1.0 + step / 2.0);
      if (shifted) *shifted = true;
    } else {
      grid.push_back(x);
    }
  }
  return grid;
}

ScanTable gamma_scan(const std::vector<double>& gamma_grid, int n_sites,
                     const SweepOptions& opts) {
  check_even_sites(n_sites, "gamma_scan");
  if (gamma_grid.empty()) throw std::invalid_argument("gamma_scan: empty grid");
  for (std::size_t i = 0; i < gamma_grid.size(); ++i) {
    if (std::abs(gamma_grid[i] + 1.0) < 1e-12)
      throw BranchAmbiguityError("gamma_scan: grid contains the branch point -1");
    if (i > 0 && !(gamma_grid[i] > gamma_grid[i - 1]))
      throw std::invalid_argument("gamma_scan: grid must be strictly increasing");
  }

  const ProductState ones = named_product(ProductKind::AllOnes, n_sites);
  const ProductState pm = named_product(ProductKind::PlusMinus, n_sites);
  const ProductState neel = named_product(ProductKind::Neel, n_sites);

  ScanTable table;
  table.rows.reserve(gamma_grid.size());
  for (double gamma : gamma_grid) {
    const GroundSolution sol = ground_state(n_sites, gamma, default_b_z(gamma));
    const GEResult ge = max_overlap(sol.state, opts);

    ScanRow row;
    row.gamma = gamma;
    row.e_g = sol.energy;
    row.lambda1_sq = sq(std::abs(overlap(ones, sol.state)));
    row.lambda2_sq = sq(std::abs(overlap(pm, sol.state)));
    row.lambda3_sq = sq(std::abs(overlap(neel, sol.state)));
    row.lambda_max_sq = sq(ge.lambda_max);
    row.e_log2 = ge.e_log2;
    table.rows.push_back(row);
  }
  return table;
}

BetaScan beta_scan(double gamma, const std::vector<double>& beta_grid,
                   int n_sites) {
  check_even_sites(n_sites, "beta_scan");
  if (beta_grid.empty()) throw std::invalid_argument("beta_scan: empty grid");

  const GroundSolution sol = ground_state(n_sites, gamma, default_b_z(gamma));
  const ProductState neel = named_product(ProductKind::Neel, n_sites);

  BetaScan out;
  out.gamma = gamma;
  out.points.reserve(beta_grid.size());
  for (double beta : beta_grid) {
    const ProductState psi = rotate_product_y(neel, beta);
    out.points.push_back({beta, sq(std::abs(overlap(psi, sol.state)))});
  }
  return out;
}

ScanTable apply_decay(ScanTable table, const DecayModel& model) {
  check_decay(model);
  for (auto& row : table.rows) {
    row.lambda2_sq *= model.alpha2;
    row.lambda3_sq *= model.alpha3;
  }
  return table;
}

ScanTable remove_decay(ScanTable table, const DecayModel& model) {
  check_decay(model);
  for (auto& row : table.rows) {
    row.lambda2_sq /= model.alpha2;
    row.lambda3_sq /= model.alpha3;
  }
  return table;
}

PolyFit fit_polynomial(const Curve& pts, int degree) {
  if (degree < 1) throw std::invalid_argument("fit_polynomial: degree must be >= 1");
  if (pts.x.size() != pts.y.size())
    throw std::invalid_argument("fit_polynomial: x/y size mismatch");
  const Eigen::Index n = static_cast<Eigen::Index>(pts.x.size());
  const Eigen::Index m = degree + 1;
  if (n < m) throw FitError("fit_polynomial: need at least degree+1 points");

  std::vector<double> distinct(pts.x);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (static_cast<Eigen::Index>(distinct.size()) < m)
    throw FitError("fit_polynomial: fewer than degree+1 distinct x values");

  Eigen::MatrixXd a(n, m);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double p = 1.0;
    for (Eigen::Index j = 0; j < m; ++j) {
      a(i, j) = p;
      p *= pts.x[i];
    }
    y(i) = pts.y[i];
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < m) throw FitError("fit_polynomial: rank-deficient design");
  const Eigen::VectorXd c = qr.solve(y);

  PolyFit fit;
  fit.degree = degree;
  fit.coefficients.assign(c.data(), c.data() + m);
  fit.rss = (a * c - y).squaredNorm();
  return fit;
}

double polyval(const PolyFit& fit, double x) {
  double acc = 0.0;
  for (auto it = fit.coefficients.rbegin(); it != fit.coefficients.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

CrossingResult detect_crossing(const Curve& a, const Curve& b, int degree) {
  if (a.x.empty() || b.x.empty())
    throw std::invalid_argument("detect_crossing: empty curve");
  const double lo = std::max(*std::min_element(a.x.begin(), a.x.end()),
                             *std::min_element(b.x.begin(), b.x.end()));
  const double hi = std::min(*std::max_element(a.x.begin(), a.x.end()),
                             *std::max_element(b.x.begin(), b.x.end()));
  if (!(lo < hi))
    throw NoCrossingError("detect_crossing: curves share no x range");

  const PolyFit fa = fit_polynomial(a, degree);
  const PolyFit fb = fit_polynomial(b, degree);
  const auto diff = [&](double x) { return polyval(fa, x) - polyval(fb, x); };

  constexpr int kSamples = 2000;
  std::vector<double> roots;
  double x_prev = lo;
  double d_prev = diff(lo);
  for (int k = 1; k <= kSamples; ++k) {
    const double x = lo + (hi - lo) * k / kSamples;
    const double d = diff(x);
    if (d_prev == 0.0) {
      roots.push_back(x_prev);
    } else if (d_prev * d < 0.0) {
      double l = x_prev, r = x, dl = d_prev;
      for (int it = 0; it < 200 && (r - l) > 1e-14 * (hi - lo); ++it) {
        const double mid = 0.5 * (l + r);
        const double dm = diff(mid);
        if (dm == 0.0) {
          l = r = mid;
          break;
        }
        if (dl * dm < 0.0)
          r = mid;
        else {
          l = mid;
          dl = dm;
        }
      }
      roots.push_back(0.5 * (l + r));
    }
    x_prev = x;
    d_prev = d;
  }
  if (d_prev == 0.0) roots.push_back(hi);

  if (roots.empty())
    throw NoCrossingError("detect_crossing: fitted curves do not intersect in range");

  const double mid = 0.5 * (lo + hi);
  const auto nearest =
      std::min_element(roots.begin(), roots.end(), [mid](double p, double q) {
        return std::abs(p - mid) < std::abs(q - mid);
      });

  CrossingResult res;
  res.x = *nearest;
  res.sign_changes = static_cast<int>(roots.size());
  return res;
}

double detect_jump(const ScanTable& table, double threshold) {
  if (!(threshold > 0.0))
    throw std::domain_error("detect_jump: threshold must be positive");
  if (table.rows.size() < 2)
    throw std::invalid_argument("detect_jump: need at least two rows");

  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    const double delta =
        std::abs(table.rows[i].e_log2 - table.rows[i - 1].e_log2);
    if (delta > threshold)
      return 0.5 * (table.rows[i].gamma + table.rows[i - 1].gamma);
  }
  throw NoJumpError("detect_jump: no adjacent pair exceeds the threshold");
}

}  // namespace xxzge
