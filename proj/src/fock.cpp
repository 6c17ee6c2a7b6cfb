#include "hts/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hts::fock {

Vec basis_state(Eigen::Index n, Eigen::Index dim) {
  if (dim < 1) throw std::invalid_argument("basis_state: dim must be >= 1");
  if (n < 0 || n >= dim)
    throw std::domain_error("basis_state: index " + std::to_string(n) +
                            " outside dimension " + std::to_string(dim));
  Vec v = Vec::Zero(dim);
  v(n) = 1.0;
  return v;
}

Mat annihilator(Eigen::Index dim) {
  if (dim < 2) throw std::invalid_argument("annihilator: dim must be >= 2");
  Mat a = Mat::Zero(dim, dim);
  for (Eigen::Index n = 1; n < dim; ++n)
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Mat creator(Eigen::Index dim) { return annihilator(dim).adjoint(); }

Complex inner(const Vec& u, const Vec& v) {
  if (u.size() != v.size())
    throw std::domain_error("inner: dimension mismatch " +
                            std::to_string(u.size()) + " vs " +
                            std::to_string(v.size()));
  return u.dot(v);  // Eigen conjugates the first operand
}

bool is_normalized(const Vec& v, double tol) {
  return std::abs(v.norm() - 1.0) < tol;
}

double hermiticity_error(const Mat& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_error(const Mat& u) {
  Mat gram = u.adjoint() * u;
  return (gram - Mat::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

DensityReport check_density(const Mat& rho) {
  if (rho.rows() != rho.cols())
    throw std::domain_error("check_density: matrix is not square");
  DensityReport report;
  report.hermiticity = hermiticity_error(rho);
  Mat herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> solver(herm,
                                            Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.trace_gap = std::abs(rho.trace() - Complex(1.0, 0.0));
  return report;
}

}  // namespace hts::fock
