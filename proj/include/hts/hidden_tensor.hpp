#pragma once

#include <cstdint>
#include <vector>

#include "hts/fock.hpp"

namespace hts {

/// Factorization D = K * prod(radices) of a truncated space into an outer
/// K-dimensional factor and one inner factor per radix. Radices are ordered
/// outermost-first, matching RadixSpec, so a basis index decomposes as
/// n = inner_dim()*k + (combined inner index). Two-factor splits carry a
/// single radix.
struct FactorSplit {
  Eigen::Index outer_dim = 0;  // K
  std::vector<std::int64_t> radices;

  static FactorSplit two_factor(std::int64_t inner_radix, Eigen::Index outer_dim);
  static FactorSplit multi(std::int64_t radix, std::size_t num_levels,
                           Eigen::Index outer_dim);

  Eigen::Index inner_dim() const;  // prod(radices)
  Eigen::Index dim() const;        // outer_dim * inner_dim()
  std::size_t levels() const { return radices.size(); }
  bool uniform() const;

  void validate() const;
};

/// Amplitudes of |f (x) g>: psi_n = f_k * g_l with n = inner*k + l.
Vec hidden_kron(const Vec& outer, const Vec& inner, const FactorSplit& split);

/// Q (x) I: acts on the outer factor, (Q(x)I)_{Nk+l,Nk'+l'} = Q_{kk'} d_{ll'}.
Mat embed_left(const Mat& op, const FactorSplit& split);

/// I (x) R: acts on the combined inner factor.
Mat embed_right(const Mat& op, const FactorSplit& split);

/// Acts on the single digit at `position` (0 = least significant / innermost).
/// Requires a uniform split; op must be radix x radix.
Mat embed_at(const Mat& op, std::size_t position, const FactorSplit& split);

/// Reduced density matrix of the outer factor:
/// rho_{kk'} = sum_l psi_{Nk+l} conj(psi_{Nk'+l}).
Mat reduce_left(const Vec& psi, const FactorSplit& split);

/// Reduced density matrix of the combined inner factor:
/// rho_{ll'} = sum_k psi_{Nk+l} conj(psi_{Nk+l'}).
Mat reduce_right(const Vec& psi, const FactorSplit& split);

/// Reduced density matrix of the single digit at `position` (uniform splits).
Mat reduce_at(const Vec& psi, std::size_t position, const FactorSplit& split);

struct SchmidtResult {
  bool product = false;
  Eigen::VectorXd singular_values;  // descending
};

/// Reshapes psi into a K x inner matrix and classifies by singular values:
/// product iff exactly one singular value exceeds rel_tol * largest.
SchmidtResult schmidt_classify(const Vec& psi, const FactorSplit& split,
                               double rel_tol = 1e-10);

/// Elementwise max |(A (x) I_{n1}) (x) I_{n0}  -  A (x) I_{n1*n0}|.
/// An exact index identity: the two constructions place identical values,
/// so the deviation is exactly zero.
double compose_identity_check(const Mat& op, std::int64_t n1, std::int64_t n0);

}  // namespace hts
