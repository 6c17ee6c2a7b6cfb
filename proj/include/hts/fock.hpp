#pragma once

#include <Eigen/Dense>
#include <complex>

namespace hts {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

namespace fock {

/// Unit vector |n> in a dim-dimensional truncated Fock space.
Vec basis_state(Eigen::Index n, Eigen::Index dim);

/// Standard ladder matrices: <n|a|n+1> = sqrt(n+1). creator() is the adjoint.
Mat annihilator(Eigen::Index dim);
Mat creator(Eigen::Index dim);

/// <u|v>, conjugate-linear in the first argument.
Complex inner(const Vec& u, const Vec& v);

bool is_normalized(const Vec& v, double tol = 1e-12);

double hermiticity_error(const Mat& m);          // max|M - M†|
double unitarity_error(const Mat& u);            // max|U†U - I|

/// Validation of a density matrix candidate: Hermiticity defect, smallest
/// eigenvalue of the Hermitian part, and |trace - 1|.
struct DensityReport {
  double hermiticity = 0.0;
  double min_eigenvalue = 0.0;
  double trace_gap = 0.0;
};
DensityReport check_density(const Mat& rho);

}  // namespace fock
}  // namespace hts
