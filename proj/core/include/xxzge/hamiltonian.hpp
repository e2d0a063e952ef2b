#pragma once

// Periodic XXZ chain with a longitudinal field,
//
//   H = sum_i X_i X_{i+1} + Y_i Y_{i+1} + gamma Z_i Z_{i+1} + b_z sum_i Z_i,
//
// with site N+1 identified with site 1. The bond sum always runs over N
// terms, so N = 2 counts its single physical bond twice.

#include <Eigen/Dense>

#include "xxzge/state.hpp"

namespace xxzge {

// Dense diagonalization is capped at this Hilbert-space dimension (N = 12).
inline constexpr std::size_t kDenseDimensionCap = 4096;

// Gap below which the ground level is treated as degenerate.
inline constexpr double kDegenerateGapTol = 1e-9;

struct GroundSolution {
  double energy = 0.0;
  double gap = 0.0;  // E_1 - E_0
  StateVector state;
};

// Dense real-symmetric Hamiltonian matrix in the bit-string basis.
// Throws std::domain_error for n_sites < 2 and CapacityError past the cap.
Eigen::MatrixXcd build_xxz(int n_sites, double gamma, double b_z = 0.0);

// Lowest eigenpair with the canonical global phase applied.
// Throws DegenerateGroundError when E_1 - E_0 < kDegenerateGapTol.
GroundSolution ground_state(const Eigen::MatrixXcd& h, int n_sites);

GroundSolution ground_state(int n_sites, double gamma, double b_z = 0.0);

}  // namespace xxzge
