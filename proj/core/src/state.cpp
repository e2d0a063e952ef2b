#include "xxzge/state.hpp"

#include <cmath>
#include <stdexcept>

namespace xxzge {

namespace {

void check_product(const ProductState& psi) {
  if (psi.n_sites < 1 || psi.locals.size() != static_cast<std::size_t>(psi.n_sites))
    throw std::invalid_argument("product state has inconsistent site count");
}

}  // namespace

Complex overlap(const ProductState& psi, const StateVector& g) {
  check_product(psi);
  if (psi.n_sites != g.n_sites)
    throw std::invalid_argument("overlap: site counts differ");
  const std::size_t dim = dimension(g.n_sites);
  if (static_cast<std::size_t>(g.amplitudes.size()) != dim)
    throw std::invalid_argument("overlap: state vector has wrong dimension");

  Complex acc = 0.0;
  for (std::size_t b = 0; b < dim; ++b) {
    Complex c = g.amplitudes(static_cast<Eigen::Index>(b));
    if (c == 0.0) continue;
    for (int site = 1; site <= psi.n_sites; ++site)
      c *= std::conj(psi.locals[site - 1](bit_at(b, psi.n_sites, site)));
    acc += c;
  }
  return acc;
}

StateVector product_to_statevector(const ProductState& psi) {
  check_product(psi);
  const std::size_t dim = dimension(psi.n_sites);
  StateVector out;
  out.n_sites = psi.n_sites;
  out.amplitudes.resize(static_cast<Eigen::Index>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    Complex c = 1.0;
    for (int site = 1; site <= psi.n_sites; ++site)
      c *= psi.locals[site - 1](bit_at(b, psi.n_sites, site));
    out.amplitudes(static_cast<Eigen::Index>(b)) = c;
  }
  return out;
}

ProductState named_product(ProductKind kind, int n_sites) {
  if (n_sites < 2) throw std::domain_error("named_product: need n_sites >= 2");
  if (kind != ProductKind::AllOnes && n_sites % 2 != 0)
    throw std::domain_error("named_product: alternating states need even n_sites");

  const double r = 1.0 / std::sqrt(2.0);
  ProductState psi;
  psi.n_sites = n_sites;
  psi.locals.resize(n_sites);
  for (int site = 1; site <= n_sites; ++site) {
    Eigen::Vector2cd& v = psi.locals[site - 1];
    switch (kind) {
      case ProductKind::AllOnes:
        v << 0.0, 1.0;
        break;
      case ProductKind::PlusMinus:
        // |+> on odd sites, |-> on even sites
        v << r, (site % 2 == 1 ? r : -r);
        break;
      case ProductKind::Neel:
        if (site % 2 == 1)
          v << 1.0, 0.0;
        else
          v << 0.0, 1.0;
        break;
    }
  }
  return psi;
}

ProductState rotate_product_y(const ProductState& psi, double beta) {
  check_product(psi);
  const double c = std::cos(beta / 2.0);
  const double s = std::sin(beta / 2.0);
  Eigen::Matrix2cd rot;
  rot << c, -s, s, c;

  ProductState out = psi;
  for (auto& local : out.locals) local = rot * local;
  return out;
}

void fix_global_phase(StateVector& v) {
  Eigen::Index best = -1;
  double best_mag = 0.0;
  for (Eigen::Index i = 0; i < v.amplitudes.size(); ++i) {
    const double mag = std::abs(v.amplitudes(i));
    if (mag > best_mag) {  // ties keep the lowest index
      best_mag = mag;
      best = i;
    }
  }
  if (best < 0 || best_mag == 0.0) return;
  const Complex phase = v.amplitudes(best) / best_mag;
  v.amplitudes /= phase;
  // kill the residual imaginary dust on the anchor
  v.amplitudes(best) = best_mag;
}

}  // namespace xxzge
