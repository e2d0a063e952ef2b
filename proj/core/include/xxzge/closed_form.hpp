#pragma once

// Closed-form ground-state data for the N = 4 periodic XXZ chain.
//
// For gamma < -1 the ground state is the fully polarized |1111> (made
// unique by an infinitesimal Zeeman term, energy 4*gamma at b_z = 0+).
// For gamma > -1 it lives in the two-dimensional S_z = 0 momentum-0 space
// spanned by
//   phi_1 = (|0101> + |1010>)/sqrt(2)
//   phi_2 = (|1100> + |0011> + |1001> + |0110>)/2
// as cos(alpha) phi_1 + sin(alpha) phi_2, where alpha is the ground
// direction of the effective 2x2 block -4 [[gamma, -sqrt(2)], [-sqrt(2), 0]].

#include "xxzge/state.hpp"

namespace xxzge {

// Ground energy, both branches: 4*gamma for gamma <= -1,
// -2*gamma - 2*sqrt(gamma^2 + 8) for gamma >= -1 (they agree at -1).
double eg_closed(double gamma);

// Mixing angle alpha(gamma) = -atan2(2*sqrt(2), gamma)/2, in (-pi/2, 0).
// Only defined on the gamma > -1 branch.
double alpha_of_gamma(double gamma);

// Overlaps of the ground state with |1111>, U_p(pi/2)|0101> and |0101>.
struct OverlapTriple {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
};

// gamma < -1: (1, 1/4, 0).
// gamma > -1: (0, (sqrt(2)/4) cos(alpha) - (1/2) sin(alpha), cos(alpha)/sqrt(2)).
// Throws BranchAmbiguityError at gamma = -1.
OverlapTriple overlaps_closed(double gamma);

// The closed-form ground state as a 16-component vector.
// For gamma < -1 the polarized state is returned only when zeeman_lifted
// is true; otherwise the level is degenerate and DegenerateGroundError is
// thrown. Throws BranchAmbiguityError at gamma = -1.
StateVector ground_state_closed(double gamma, bool zeeman_lifted = true);

}  // namespace xxzge
