#pragma once

// Basis conventions, full state vectors and product (rank-1) states for a
// chain of N spin-1/2 sites.
//
// Site 1 is the most significant bit of the basis index: for N = 4 the
// configuration |0101> is index 0b0101 = 5, and bit q_i of index b is
// (b >> (N - i)) & 1 with i = 1..N.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace xxzge {

using Complex = std::complex<double>;

inline std::size_t dimension(int n_sites) { return std::size_t{1} << n_sites; }

inline int bit_at(std::size_t basis, int n_sites, int site) {
  return static_cast<int>((basis >> (n_sites - site)) & 1u);
}

// Normalized vector in the 2^N dimensional Hilbert space.
struct StateVector {
  int n_sites = 0;
  Eigen::VectorXcd amplitudes;
};

// Unentangled state: one normalized C^2 spinor per site.
struct ProductState {
  int n_sites = 0;
  std::vector<Eigen::Vector2cd> locals;
};

enum class ProductKind { AllOnes, PlusMinus, Neel };

// <Psi|g> where Psi is the product state. O(2^N * N).
Complex overlap(const ProductState& psi, const StateVector& g);

// Expand the tensor product into a full state vector.
StateVector product_to_statevector(const ProductState& psi);

// Reference product states: |11...1>, |+-+-...>, |0101...>.
// The alternating kinds need even n_sites.
ProductState named_product(ProductKind kind, int n_sites);

// Apply the same local rotation exp(-i beta Y / 2) to every site.
// beta = 0 is the identity; the angles add under composition.
ProductState rotate_product_y(const ProductState& psi, double beta);

// Canonical global phase: the largest-magnitude amplitude (lowest index on
// ties) is made real and positive. No-op on the zero vector.
void fix_global_phase(StateVector& v);

}  // namespace xxzge
