#include "xxzge/hamiltonian.hpp"

#include <stdexcept>
#include <string>

#include "xxzge/errors.hpp"

namespace xxzge {

Eigen::MatrixXcd build_xxz(int n_sites, double gamma, double b_z) {
  if (n_sites < 2) throw std::domain_error("build_xxz: need n_sites >= 2");
  const std::size_t dim = dimension(n_sites);
  if (dim > kDenseDimensionCap)
    throw CapacityError("build_xxz: 2^" + std::to_string(n_sites) +
                        " exceeds the dense cap of " +
                        std::to_string(kDenseDimensionCap));

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  // Z|0> = +|0>, Z|1> = -|1>
  auto zval = [](int bit) { return bit == 0 ? 1.0 : -1.0; };

  for (std::size_t b = 0; b < dim; ++b) {
    double diag = 0.0;
    for (int site = 1; site <= n_sites; ++site) {
      const int next = site % n_sites + 1;  // periodic: N+1 -> 1
      const int qi = bit_at(b, n_sites, site);
      const int qj = bit_at(b, n_sites, next);
      diag += gamma * zval(qi) * zval(qj);
      // XX + YY flips antiparallel neighbour pairs with amplitude 2
      if (qi != qj) {
        const std::size_t flipped =
            b ^ (std::size_t{1} << (n_sites - site)) ^ (std::size_t{1} << (n_sites - next));
        h(static_cast<Eigen::Index>(flipped), static_cast<Eigen::Index>(b)) += 2.0;
      }
    }
    for (int site = 1; site <= n_sites; ++site)
      diag += b_z * zval(bit_at(b, n_sites, site));
    h(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = diag;
  }
  return h;
}

GroundSolution ground_state(const Eigen::MatrixXcd& h, int n_sites) {
  const std::size_t dim = dimension(n_sites);
  if (h.rows() != h.cols() || static_cast<std::size_t>(h.rows()) != dim)
    throw std::invalid_argument("ground_state: matrix size does not match n_sites");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("ground_state: eigensolver failed to converge");

  const auto& evals = solver.eigenvalues();  // ascending
  GroundSolution sol;
  sol.energy = evals(0);
  sol.gap = evals(1) - evals(0);
  if (sol.gap < kDegenerateGapTol)
    throw DegenerateGroundError("ground_state: gap " + std::to_string(sol.gap) +
                                " below tolerance; lift the degeneracy");

  sol.state.n_sites = n_sites;
  sol.state.amplitudes = solver.eigenvectors().col(0);
  fix_global_phase(sol.state);
  return sol;
}

GroundSolution ground_state(int n_sites, double gamma, double b_z) {
  return ground_state(build_xxz(n_sites, gamma, b_z), n_sites);
}

}  // namespace xxzge
