#include <doctest.h>

#include <cmath>
#include <numbers>

#include "xxzge/closed_form.hpp"
#include "xxzge/errors.hpp"
#include "xxzge/hamiltonian.hpp"

using namespace xxzge;

namespace {

// reference values computed with 40-digit arithmetic
constexpr double kAlpha1 = -0.6154797086703873412;
constexpr double kCosAlpha1 = 0.8164965809277260327;
constexpr double kSinAlpha1 = -0.5773502691896257645;
constexpr double kL2Sq0 = 0.3642766952966368811;
constexpr double kL2Sq3 = 0.2632923828238540537;
constexpr double kL3Sq3 = 0.4319017187772497302;
constexpr double kEg095 = -4.0674114991342771;
constexpr double kEg2 = -10.9282032302755092;
constexpr double kEg3 = -14.2462112512353211;

}  // namespace

TEST_SUITE("closed_form") {

TEST_CASE("ground energy branches") {
  CHECK(eg_closed(-2.0) == -8.0);
  CHECK(std::abs(eg_closed(0.0) - (-4.0 * std::sqrt(2.0))) < 1e-14);
  CHECK(std::abs(eg_closed(1.0) - (-8.0)) < 1e-14);
  CHECK(std::abs(eg_closed(-0.95) - kEg095) < 1e-13);
  CHECK(std::abs(eg_closed(2.0) - kEg2) < 1e-13);
  CHECK(std::abs(eg_closed(3.0) - kEg3) < 1e-13);
  // the branches meet at the transition
  CHECK(eg_closed(-1.0) == -4.0);
  CHECK(std::abs(eg_closed(-1.0 - 1e-9) - eg_closed(-1.0 + 1e-9)) < 1e-8);
}

TEST_CASE("mixing angle") {
  CHECK(std::abs(alpha_of_gamma(0.0) - (-std::numbers::pi / 4.0)) < 1e-15);
  CHECK(std::abs(alpha_of_gamma(1.0) - kAlpha1) < 1e-15);
  CHECK_THROWS_AS(alpha_of_gamma(-1.0), std::domain_error);
  CHECK_THROWS_AS(alpha_of_gamma(-2.0), std::domain_error);

  for (double gamma = -0.99; gamma <= 3.0; gamma += 0.03) {
    const double a = alpha_of_gamma(gamma);
    CHECK(a > -std::numbers::pi / 2.0);
    CHECK(a < 0.0);
    // defining identity in projective form, stable through gamma = 0
    const double resid =
        gamma * std::sin(2.0 * a) + 2.0 * std::sqrt(2.0) * std::cos(2.0 * a);
    CHECK(std::abs(resid) < 1e-12);
  }
}

TEST_CASE("alpha is the ground direction of the effective 2x2 block") {
  for (double gamma : {-0.9, 0.0, 1.0, 3.0}) {
    Eigen::Matrix2d block;
    block << -4.0 * gamma, 4.0 * std::sqrt(2.0), 4.0 * std::sqrt(2.0), 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(block);
    CHECK(std::abs(es.eigenvalues()(0) - eg_closed(gamma)) < 1e-12);

    const double a = alpha_of_gamma(gamma);
    Eigen::Vector2d dir(std::cos(a), std::sin(a));
    const double align = std::abs(dir.dot(es.eigenvectors().col(0)));
    CHECK(std::abs(align - 1.0) < 1e-10);
  }
}

TEST_CASE("closed-form overlaps") {
  SUBCASE("polarized branch") {
    const OverlapTriple t = overlaps_closed(-2.0);
    CHECK(t.lambda1 == 1.0);
    CHECK(t.lambda2 == 0.25);
    CHECK(t.lambda3 == 0.0);
  }
  SUBCASE("KT point: both alternating overlaps hit 1/sqrt(3)") {
    const OverlapTriple t = overlaps_closed(1.0);
    CHECK(std::abs(t.lambda2 * t.lambda2 - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(t.lambda3 * t.lambda3 - 1.0 / 3.0) < 1e-15);
  }
  SUBCASE("XY point") {
    const OverlapTriple t = overlaps_closed(0.0);
    CHECK(std::abs(t.lambda2 * t.lambda2 - kL2Sq0) < 1e-15);
    CHECK(std::abs(t.lambda3 * t.lambda3 - 0.25) < 1e-15);
  }
  SUBCASE("Neel phase reference point") {
    const OverlapTriple t = overlaps_closed(3.0);
    CHECK(std::abs(t.lambda2 * t.lambda2 - kL2Sq3) < 1e-15);
    CHECK(std::abs(t.lambda3 * t.lambda3 - kL3Sq3) < 1e-15);
  }
  SUBCASE("branch point rejected") {
    CHECK_THROWS_AS(overlaps_closed(-1.0), BranchAmbiguityError);
  }
  SUBCASE("the two alternating overlaps cross exactly once, at gamma = 1") {
    int sign_changes = 0;
    double where = 0.0;
    double prev = overlaps_closed(-0.99).lambda2 - overlaps_closed(-0.99).lambda3;
    for (double gamma = -0.98; gamma <= 3.0; gamma += 0.01) {
      const OverlapTriple t = overlaps_closed(gamma);
      const double diff = t.lambda2 - t.lambda3;
      if (gamma < 1.0 - 1e-9) CHECK(diff > 0.0);
      if (gamma > 1.0 + 1e-9) CHECK(diff < 0.0);
      if (prev * diff < 0.0) {
        ++sign_changes;
        where = gamma;
      }
      prev = diff;
    }
    CHECK(sign_changes == 1);
    CHECK(std::abs(where - 1.0) < 0.011);
  }
}

TEST_CASE("closed-form state vector") {
  SUBCASE("polarized") {
    const StateVector g = ground_state_closed(-2.0);
    CHECK(g.amplitudes(15) == Complex(1.0, 0.0));
    CHECK(std::abs(g.amplitudes.norm() - 1.0) < 1e-15);
    CHECK_THROWS_AS(ground_state_closed(-2.0, false), DegenerateGroundError);
  }
  SUBCASE("branch point rejected") {
    CHECK_THROWS_AS(ground_state_closed(-1.0), BranchAmbiguityError);
  }
  SUBCASE("KT point amplitudes") {
    const StateVector g = ground_state_closed(1.0);
    for (int idx : {5, 10})
      CHECK(std::abs(g.amplitudes(idx) - Complex(kCosAlpha1 / std::sqrt(2.0), 0)) < 1e-15);
    for (int idx : {3, 6, 9, 12})
      CHECK(std::abs(g.amplitudes(idx) - Complex(kSinAlpha1 / 2.0, 0)) < 1e-15);
    CHECK(std::abs(g.amplitudes.norm() - 1.0) < 1e-14);
  }
  SUBCASE("normalized across the band") {
    for (double gamma = -0.99; gamma <= 3.0; gamma += 0.07)
      CHECK(std::abs(ground_state_closed(gamma).amplitudes.norm() - 1.0) < 1e-14);
  }
}

TEST_CASE("closed forms agree with dense diagonalization") {
  for (double gamma = -0.99; gamma <= 3.001; gamma += 0.01) {
    INFO("gamma=", gamma);
    const GroundSolution sol = ground_state(4, gamma);
    CHECK(std::abs(sol.energy - eg_closed(gamma)) < 1e-10);

    const StateVector closed = ground_state_closed(gamma);
    const Complex fid = closed.amplitudes.adjoint() * sol.state.amplitudes;
    CHECK(std::abs(fid) * std::abs(fid) >= 1.0 - 1e-10);

    const OverlapTriple t = overlaps_closed(gamma);
    const ProductState ones = named_product(ProductKind::AllOnes, 4);
    const ProductState pm = named_product(ProductKind::PlusMinus, 4);
    const ProductState neel = named_product(ProductKind::Neel, 4);
    CHECK(std::abs(overlap(ones, sol.state) - Complex(t.lambda1, 0)) < 1e-9);
    CHECK(std::abs(overlap(pm, sol.state) - Complex(t.lambda2, 0)) < 1e-9);
    CHECK(std::abs(overlap(neel, sol.state) - Complex(t.lambda3, 0)) < 1e-9);
  }
}

}  // TEST_SUITE
