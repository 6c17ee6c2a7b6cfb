#pragma once

#include <cstdint>
#include <utility>

#include "hts/fock.hpp"

namespace hts::parity {

/// Uniform grid of `points` samples over [-length/2, length/2]. `points` must
/// be odd so composite Simpson weights exist and the grid is symmetric about
/// x = 0.
struct Grid {
  double length = 2.0;
  Eigen::Index points = 4097;

  Eigen::VectorXd x() const;
  Eigen::VectorXd simpson_weights() const;
  void validate() const;

  /// Largest basis index the grid resolves; synthesis stays far from Nyquist.
  std::int64_t max_index() const { return points / 8; }
};

/// Real standing-wave basis on the interval:
///   <x|2j>   = sqrt(2/L) cos((2j+1) pi x / L)   (even functions)
///   <x|2j+1> = sqrt(2/L) sin((2j+2) pi x / L)   (odd functions)
Eigen::VectorXd standing_wave(std::int64_t n, const Grid& grid);

/// Simpson integral of real samples over the grid.
double integrate(const Eigen::VectorXd& samples, const Grid& grid);

/// Quadrature inner product of complex grid functions.
Complex grid_inner(const Vec& f, const Vec& g, const Grid& grid);

/// Synthesizes the hidden-spin components psi_l(x) = sum_k c_{2k+l} <x|2k+l>.
/// Their sum reproduces the full synthesis of c.
std::pair<Vec, Vec> split_components(const Vec& coefficients, const Grid& grid);

struct HiddenDensity {
  Eigen::VectorXd rho;           // |psi0 + psi1|^2
  Eigen::VectorXd rho_hidden;    // |psi0|^2 + |psi1|^2
  Eigen::VectorXd interference;  // 2 Re(conj(psi0) psi1)
};
HiddenDensity hidden_density(const Vec& psi0, const Vec& psi1);

/// s_i = sum_k sum_{l,l'} conj(c_{2k+l}) sigma^i_{ll'} c_{2k+l'}, computed in
/// coefficient space (no quadrature). Odd-length coefficient vectors are
/// padded with a zero.
Eigen::Vector3d bloch_vector(const Vec& coefficients);

/// c'_{2k+l} = sum_{l'} U_{ll'} c_{2k+l'}; requires even length.
Vec spinor_rotate(const Vec& coefficients, const Eigen::Matrix2cd& u);

/// SO(3) rotation induced by a 2x2 unitary: R_ij = Re tr(sigma_i U sigma_j U†)/2.
Eigen::Matrix3d induced_rotation(const Eigen::Matrix2cd& u);

Eigen::Matrix2cd pauli(int axis);  // 1,2,3 -> sigma_x, sigma_y, sigma_z

}  // namespace hts::parity
