#pragma once

#include <stdexcept>

namespace xxzge {

// Requested Hilbert-space dimension exceeds the dense-solver cap.
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

// Ground level degenerate within tolerance; lift it (e.g. with a small
// longitudinal field) before asking for a unique ground state.
struct DegenerateGroundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// gamma = -1 sits on the first-order branch point: neither closed-form
// branch applies and scans must not sample it.
struct BranchAmbiguityError : std::domain_error {
  using std::domain_error::domain_error;
};

// Overlap of zero passed to the entanglement map (upstream bug).
struct InfiniteEntanglementError : std::domain_error {
  using std::domain_error::domain_error;
};

// Least-squares system is rank deficient or otherwise unsolvable.
struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fitted curves never intersect inside the common x range.
struct NoCrossingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No adjacent pair in the scan jumps by more than the threshold.
struct NoJumpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace xxzge
