#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hts/hidden_tensor.hpp"
#include "hts/spin_parity.hpp"

using namespace hts;

namespace {

Vec random_coeffs(std::mt19937_64& rng, Eigen::Index dim,
                  bool normalize = true) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  if (normalize) v /= v.norm();
  return v;
}

Eigen::Matrix2cd random_unitary_2(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Matrix2cd m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  const Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
  return qr.householderQ();
}

}  // namespace

TEST_CASE("standing waves") {
  const parity::Grid grid{2.0, 1025};
  SUBCASE("n = 0 is the even fundamental, n = 1 the odd one") {
    const auto w0 = parity::standing_wave(0, grid);
    const auto w1 = parity::standing_wave(1, grid);
    const auto xs = grid.x();
    CHECK(w0(512) == doctest::Approx(std::sqrt(2.0 / 2.0)));  // cos(0)
    CHECK(std::abs(w1(512)) < 1e-14);                         // sin(0)
    for (Eigen::Index i = 0; i < grid.points; ++i) {
      CHECK(w0(grid.points - 1 - i) == doctest::Approx(w0(i)));    // even
      CHECK(w1(grid.points - 1 - i) == doctest::Approx(-w1(i)));   // odd
      CHECK(w0(i) ==
            doctest::Approx(std::cos(std::numbers::pi * xs(i) / 2.0)));
    }
  }
  SUBCASE("quadrature Gram matrix is the identity") {
    const parity::Grid fine{2.0, 4097};
    const int count = 16;
    double worst = 0.0;
    std::vector<Eigen::VectorXd> waves;
    for (int n = 0; n < count; ++n)
      waves.push_back(parity::standing_wave(n, fine));
    const Eigen::VectorXd w = fine.simpson_weights();
    for (int n = 0; n < count; ++n)
      for (int m = 0; m < count; ++m) {
        const double overlap = (waves[n].array() * waves[m].array() *
                                w.array()).sum();
        worst = std::max(worst, std::abs(overlap - (n == m ? 1.0 : 0.0)));
      }
    CHECK(worst < 1e-8);
  }
  SUBCASE("indices beyond the resolution cap are rejected") {
    CHECK_THROWS_AS(parity::standing_wave(grid.max_index() + 1, grid),
                    std::domain_error);
    CHECK_THROWS_AS((parity::Grid{2.0, 1024}.simpson_weights()),
                    std::invalid_argument);  // even point count
  }
}

TEST_CASE("component split") {
  const parity::Grid grid;
  SUBCASE("a pure even state has no odd component") {
    Vec coeffs = Vec::Zero(6);
    coeffs(0) = 1.0;
    const auto [psi0, psi1] = parity::split_components(coeffs, grid);
    CHECK(psi1.cwiseAbs().maxCoeff() == 0.0);
    CHECK(psi0.cwiseAbs().maxCoeff() > 0.0);
  }
  SUBCASE("components are quadrature-orthogonal and carry all probability") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 5; ++trial) {
      const Vec coeffs = random_coeffs(rng, 24);
      const auto [psi0, psi1] = parity::split_components(coeffs, grid);
      CHECK(std::abs(parity::grid_inner(psi0, psi1, grid)) < 1e-8);
      const double p0 = parity::grid_inner(psi0, psi0, grid).real();
      const double p1 = parity::grid_inner(psi1, psi1, grid).real();
      CHECK(p0 + p1 == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
  SUBCASE("the two components synthesize the full wavefunction") {
    std::mt19937_64 rng(73);
    const Vec coeffs = random_coeffs(rng, 12);
    const auto [psi0, psi1] = parity::split_components(coeffs, grid);
    Vec direct = Vec::Zero(grid.points);
    for (Eigen::Index n = 0; n < coeffs.size(); ++n)
      direct += coeffs(n) * parity::standing_wave(n, grid);
    CHECK(((psi0 + psi1) - direct).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("hidden density") {
  const parity::Grid grid;
  SUBCASE("pure parity: no interference, rho = rho_hid pointwise") {
    std::mt19937_64 rng(79);
    Vec coeffs = Vec::Zero(16);
    for (Eigen::Index k = 0; k < 8; ++k)
      coeffs(2 * k) = random_coeffs(rng, 8, false)(k);
    coeffs /= coeffs.norm();
    const auto [psi0, psi1] = parity::split_components(coeffs, grid);
    const auto density = parity::hidden_density(psi0, psi1);
    CHECK(density.interference.cwiseAbs().maxCoeff() == 0.0);
    CHECK((density.rho - density.rho_hidden).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("(e0 + e1)/sqrt2: unit mass and vanishing interference integral") {
    Vec coeffs = Vec::Zero(2);
    coeffs(0) = coeffs(1) = 1.0 / std::sqrt(2.0);
    const auto [psi0, psi1] = parity::split_components(coeffs, grid);
    const auto density = parity::hidden_density(psi0, psi1);
    CHECK(parity::integrate(density.rho, grid) ==
          doctest::Approx(1.0).epsilon(1e-8));
    CHECK(parity::integrate(density.rho_hidden, grid) ==
          doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(parity::integrate(density.interference, grid)) < 1e-8);
    // interference is genuinely present pointwise
    CHECK(density.interference.cwiseAbs().maxCoeff() > 0.1);
  }
}

TEST_CASE("bloch vector") {
  SUBCASE("pure parity pins s to (0, 0, +/-1)") {
    std::mt19937_64 rng(83);
    for (int parity_class : {0, 1}) {
      Vec coeffs = Vec::Zero(20);
      const Vec raw = random_coeffs(rng, 10);
      for (Eigen::Index k = 0; k < 10; ++k)
        coeffs(2 * k + parity_class) = raw(k);
      const Eigen::Vector3d s = parity::bloch_vector(coeffs);
      CHECK(std::abs(s(0)) < 1e-12);
      CHECK(std::abs(s(1)) < 1e-12);
      CHECK(s(2) == doctest::Approx(parity_class == 0 ? 1.0 : -1.0)
                        .epsilon(1e-12));
    }
  }
  SUBCASE("an equal in-phase mix points along +x") {
    std::mt19937_64 rng(89);
    const Vec f = random_coeffs(rng, 6);
    Vec plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    const Vec coeffs = hidden_kron(f, plus, FactorSplit::two_factor(2, 6));
    const Eigen::Vector3d s = parity::bloch_vector(coeffs);
    CHECK(s(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(s(1)) < 1e-12);
    CHECK(std::abs(s(2)) < 1e-12);
  }
  SUBCASE("parity of the synthesized wavefunction equals s3") {
    std::mt19937_64 rng(97);
    const parity::Grid grid;
    for (int parity_class : {0, 1}) {
      Vec coeffs = Vec::Zero(12);
      const Vec raw = random_coeffs(rng, 6);
      for (Eigen::Index k = 0; k < 6; ++k)
        coeffs(2 * k + parity_class) = raw(k);
      const double s3 = parity::bloch_vector(coeffs)(2);
      const auto [psi0, psi1] = parity::split_components(coeffs, grid);
      const Vec psi = psi0 + psi1;
      double worst = 0.0;
      for (Eigen::Index i = 0; i < grid.points; ++i)
        worst = std::max(worst,
                         std::abs(psi(grid.points - 1 - i) - s3 * psi(i)));
      CHECK(worst < 1e-8);
    }
  }
  SUBCASE("bloch norm measures the purity of the inner reduction") {
    std::mt19937_64 rng(101);
    const Vec coeffs = random_coeffs(rng, 16);
    const Eigen::Vector3d s = parity::bloch_vector(coeffs);
    const Mat rho = reduce_right(coeffs, FactorSplit::two_factor(2, 8));
    const double purity = (rho * rho).trace().real();
    CHECK(s.squaredNorm() ==
          doctest::Approx(2.0 * purity - 1.0).epsilon(1e-10));
  }
}

TEST_CASE("spinor rotations") {
  std::mt19937_64 rng(103);
  SUBCASE("identity does nothing") {
    const Vec coeffs = random_coeffs(rng, 10);
    CHECK((parity::spinor_rotate(coeffs, Eigen::Matrix2cd::Identity()) -
           coeffs)
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }
  SUBCASE("sigma_x flips s3 of a symmetric state") {
    Vec coeffs = Vec::Zero(8);
    const Vec raw = random_coeffs(rng, 4);
    for (Eigen::Index k = 0; k < 4; ++k) coeffs(2 * k) = raw(k);
    const Vec rotated = parity::spinor_rotate(coeffs, parity::pauli(1));
    CHECK(parity::bloch_vector(coeffs)(2) == doctest::Approx(1.0));
    CHECK(parity::bloch_vector(rotated)(2) == doctest::Approx(-1.0));
  }
  SUBCASE("random unitaries preserve the norm and rotate s by R(U)") {
    for (int trial = 0; trial < 10; ++trial) {
      const Eigen::Matrix2cd u = random_unitary_2(rng);
      const Vec coeffs = random_coeffs(rng, 14);
      const Vec rotated = parity::spinor_rotate(coeffs, u);
      CHECK(std::abs(rotated.norm() - 1.0) < 1e-12);
      const Eigen::Vector3d expected =
          parity::induced_rotation(u) * parity::bloch_vector(coeffs);
      CHECK((parity::bloch_vector(rotated) - expected).cwiseAbs().maxCoeff() <
            1e-10);
      CHECK(std::abs(parity::bloch_vector(rotated).norm() -
                     parity::bloch_vector(coeffs).norm()) < 1e-12);
    }
  }
}
