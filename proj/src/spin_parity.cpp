#include "hts/spin_parity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hts::parity {

namespace {

void require_same_size(const Vec& a, const Vec& b, const char* who) {
  if (a.size() != b.size())
    throw std::domain_error(std::string(who) + ": size mismatch");
}

}  // namespace

void Grid::validate() const {
  if (points < 3 || points % 2 == 0)
    throw std::invalid_argument("Grid: points must be odd and >= 3");
  if (!(length > 0.0))
    throw std::invalid_argument("Grid: length must be positive");
}

Eigen::VectorXd Grid::x() const {
  validate();
  return Eigen::VectorXd::LinSpaced(points, -0.5 * length, 0.5 * length);
}

Eigen::VectorXd Grid::simpson_weights() const {
  validate();
  const double h = length / static_cast<double>(points - 1);
  Eigen::VectorXd w = Eigen::VectorXd::Constant(points, 2.0);
  for (Eigen::Index i = 1; i < points; i += 2) w(i) = 4.0;
  w(0) = 1.0;
  w(points - 1) = 1.0;
  return (h / 3.0) * w;
}

Eigen::VectorXd standing_wave(std::int64_t n, const Grid& grid) {
  grid.validate();
  if (n < 0) throw std::domain_error("standing_wave: index must be >= 0");
  if (n > grid.max_index())
    throw std::domain_error("standing_wave: index " + std::to_string(n) +
                            " exceeds the grid resolution cap " +
                            std::to_string(grid.max_index()));
  const Eigen::VectorXd xs = grid.x();
  const double norm = std::sqrt(2.0 / grid.length);
  // Both parities share the frequency factor n+1:
  // even n = 2j -> cos((2j+1) pi x/L), odd n = 2j+1 -> sin((2j+2) pi x/L).
  const double wavenumber =
      std::numbers::pi / grid.length * static_cast<double>(n + 1);
  Eigen::VectorXd values(grid.points);
  for (Eigen::Index i = 0; i < grid.points; ++i)
    values(i) = n % 2 == 0 ? norm * std::cos(wavenumber * xs(i))
                           : norm * std::sin(wavenumber * xs(i));
  return values;
}

double integrate(const Eigen::VectorXd& samples, const Grid& grid) {
  if (samples.size() != grid.points)
    throw std::domain_error("integrate: sample count does not match grid");
  return grid.simpson_weights().dot(samples);
}

Complex grid_inner(const Vec& f, const Vec& g, const Grid& grid) {
  require_same_size(f, g, "grid_inner");
  if (f.size() != grid.points)
    throw std::domain_error("grid_inner: sample count does not match grid");
  const Eigen::VectorXd w = grid.simpson_weights();
  Complex sum = 0.0;
  for (Eigen::Index i = 0; i < grid.points; ++i)
    sum += w(i) * std::conj(f(i)) * g(i);
  return sum;
}

std::pair<Vec, Vec> split_components(const Vec& coefficients, const Grid& grid) {
  grid.validate();
  Vec psi0 = Vec::Zero(grid.points);
  Vec psi1 = Vec::Zero(grid.points);
  for (Eigen::Index n = 0; n < coefficients.size(); ++n) {
    if (coefficients(n) == Complex(0.0, 0.0)) continue;
    const Eigen::VectorXd wave = standing_wave(n, grid);
    Vec& target = (n % 2 == 0) ? psi0 : psi1;
    target += coefficients(n) * wave;
  }
  return {psi0, psi1};
}

HiddenDensity hidden_density(const Vec& psi0, const Vec& psi1) {
  require_same_size(psi0, psi1, "hidden_density");
  HiddenDensity out;
  out.rho_hidden = psi0.cwiseAbs2() + psi1.cwiseAbs2();
  out.interference = 2.0 * (psi0.conjugate().cwiseProduct(psi1)).real();
  out.rho = out.rho_hidden + out.interference;
  return out;
}

Eigen::Vector3d bloch_vector(const Vec& coefficients) {
  Eigen::Vector3d s = Eigen::Vector3d::Zero();
  const Eigen::Index pairs = (coefficients.size() + 1) / 2;
  for (Eigen::Index k = 0; k < pairs; ++k) {
    const Complex even = coefficients(2 * k);
    const Complex odd =
        (2 * k + 1 < coefficients.size()) ? coefficients(2 * k + 1) : 0.0;
    const Complex cross = std::conj(even) * odd;
    s(0) += 2.0 * cross.real();
    s(1) += 2.0 * cross.imag();
    s(2) += std::norm(even) - std::norm(odd);
  }
  return s;
}

Vec spinor_rotate(const Vec& coefficients, const Eigen::Matrix2cd& u) {
  if (coefficients.size() % 2 != 0)
    throw std::domain_error("spinor_rotate: coefficient vector must have even "
                            "length");
  Vec out(coefficients.size());
  for (Eigen::Index k = 0; 2 * k < coefficients.size(); ++k) {
    const Complex even = coefficients(2 * k);
    const Complex odd = coefficients(2 * k + 1);
    out(2 * k) = u(0, 0) * even + u(0, 1) * odd;
    out(2 * k + 1) = u(1, 0) * even + u(1, 1) * odd;
  }
  return out;
}

Eigen::Matrix2cd pauli(int axis) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (axis) {
    case 1:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw std::invalid_argument("pauli: axis must be 1, 2 or 3");
  }
  return m;
}

Eigen::Matrix3d induced_rotation(const Eigen::Matrix2cd& u) {
  Eigen::Matrix3d r;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      r(i - 1, j - 1) =
          0.5 * (pauli(i) * u * pauli(j) * u.adjoint()).trace().real();
  return r;
}

}  // namespace hts::parity
