#include "hts/bell.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hts/hidden_tensor.hpp"
#include "hts/spin_parity.hpp"

namespace hts::bell {

Eigen::VectorXcd geometric_weights(Eigen::Index count, double ratio) {
  if (count < 1)
    throw std::invalid_argument("geometric_weights: count must be >= 1");
  Eigen::VectorXcd w(count);
  double value = 1.0;
  for (Eigen::Index k = 0; k < count; ++k, value *= ratio) w(k) = value;
  w /= w.norm();
  return w;
}

Vec singlet(const Eigen::VectorXcd& outer_weights, Eigen::Index dim) {
  if (outer_weights.size() < 1)
    throw std::invalid_argument("singlet: at least one weight is required");
  if (std::abs(outer_weights.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("singlet: weights must be normalized");
  if (dim % 4 != 0 || dim < 4 * outer_weights.size())
    throw std::invalid_argument(
        "singlet: dim must be a multiple of 4 and cover 4 * " +
        std::to_string(outer_weights.size()) + " levels");
  Vec psi = Vec::Zero(dim);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index k = 0; k < outer_weights.size(); ++k) {
    psi(4 * k + 1) = inv_sqrt2 * outer_weights(k);   // |k, 0, 1>
    psi(4 * k + 2) = -inv_sqrt2 * outer_weights(k);  // |k, 1, 0>
  }
  return psi;
}

Eigen::Matrix2cd pauli_dot(const Eigen::Vector3d& a) {
  return a(0) * parity::pauli(1) + a(1) * parity::pauli(2) +
         a(2) * parity::pauli(3);
}

double correlation(const Vec& psi, const Eigen::Vector3d& a,
                   const Eigen::Vector3d& b) {
  if (psi.size() % 4 != 0)
    throw std::domain_error("correlation: state dimension must be a multiple "
                            "of 4");
  const FactorSplit split = FactorSplit::multi(2, 2, psi.size() / 4);
  const Mat bit1 = embed_at(pauli_dot(a), 1, split);
  const Mat bit0 = embed_at(pauli_dot(b), 0, split);
  return psi.dot(bit1 * (bit0 * psi)).real();
}

double chsh(const Vec& psi, const Eigen::Vector3d& a, const Eigen::Vector3d& ap,
            const Eigen::Vector3d& b, const Eigen::Vector3d& bp) {
  return correlation(psi, a, bp) - correlation(psi, a, b) -
         correlation(psi, ap, b) - correlation(psi, ap, bp);
}

}  // namespace hts::bell
