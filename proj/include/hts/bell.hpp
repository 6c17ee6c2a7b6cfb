#pragma once

#include "hts/fock.hpp"

namespace hts::bell {

/// Normalized geometric weight profile w_k ~ ratio^k.
Eigen::VectorXcd geometric_weights(Eigen::Index count, double ratio = 0.5);

/// Hidden singlet (1/sqrt2) sum_k w_k (|4k+1> - |4k+2>). dim must be a
/// multiple of 4 and at least 4 * (number of weights); weights must be
/// normalized.
Vec singlet(const Eigen::VectorXcd& outer_weights, Eigen::Index dim);

/// a . sigma on one hidden qubit.
Eigen::Matrix2cd pauli_dot(const Eigen::Vector3d& a);

/// <psi| (a.sigma at bit 1)(b.sigma at bit 0) |psi>. Bilinear in a and b; for
/// unit vectors on the singlet it equals -a.b regardless of the weights.
double correlation(const Vec& psi, const Eigen::Vector3d& a,
                   const Eigen::Vector3d& b);

/// CHSH combination S = E(a,b') - E(a,b) - E(a',b) - E(a',b'), which for the
/// singlet reads a.(b-b') + a'.(b+b'). The sign pattern is chosen so the
/// canonical angle set (0, 90; 45, 135 degrees) attains +2*sqrt(2).
double chsh(const Vec& psi, const Eigen::Vector3d& a, const Eigen::Vector3d& ap,
            const Eigen::Vector3d& b, const Eigen::Vector3d& bp);

}  // namespace hts::bell
