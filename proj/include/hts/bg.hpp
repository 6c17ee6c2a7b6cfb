#pragma once

#include <cstdint>
#include <vector>

#include "hts/fock.hpp"

namespace hts::bg {

/// Coefficients alpha_j of the normally ordered series
///   A_N = sum_j alpha_j a†^j a^{j+N},
///   alpha_j = sum_{l=0}^j (-1)^{j-l}/(j-l)! sqrt((1+floor(l/N)) / (l!(l+N)!)).
/// Entries are evaluated with log-factorials and pairwise summation; they
/// shrink roughly like 1/sqrt(j!(j+N)!) and underflow double precision near
/// j ~ 190 (max_finite_j records the measured boundary for this table).
struct Coefficients {
  std::int64_t order = 0;
  std::vector<double> alpha;
  std::int64_t max_finite_j = 0;
};

Coefficients coefficients(std::int64_t order, std::int64_t cutoff);

/// A_N as b (x) I_N on the split D = order * outer_dim. order = 1 degenerates
/// to the ordinary annihilator on outer_dim.
Mat annihilator_tensor(std::int64_t order, Eigen::Index outer_dim);

/// A_N from its matrix elements: <n|A_N|n+N> = sqrt(floor(n/N)+1).
/// The factorial-ratio closed form is never materialized; the matrix-element
/// form is exact and overflow-free.
Mat annihilator_closed(std::int64_t order, Eigen::Index dim);

/// A_N summed from the normally ordered monomial ladder chains, coefficients
/// from the defining alpha sum. Both the alpha table and the per-entry series
/// are accumulated in extended precision sized to the cutoff: the alternating
/// entry sums cancel by roughly 0.5 decimal digits per column, which exceeds
/// double precision for dim beyond ~35.
Mat annihilator_series(std::int64_t order, Eigen::Index dim,
                       std::int64_t cutoff);

/// max |A_{N*N'} - A_N (x) I_{N'}| at D = order * order2 * outer_dim; exactly 0.
double compose_deviation(std::int64_t order, std::int64_t order2,
                         Eigen::Index outer_dim);

/// max |[A_N, A_N†] - I| over the interior indices n < dim - order.
double commutator_deviation(std::int64_t order, Eigen::Index dim);

/// exp(z A_N† - conj(z) A_N)|0>, evaluated at a larger working dimension and
/// truncated back to dim. norm_deficit is the probability mass the truncation
/// discards; `leaky` flags a deficit above 1e-6.
struct DisplacedState {
  Vec state;
  double norm_deficit = 0.0;
  bool leaky = false;
};

DisplacedState displace(Complex z, std::int64_t order, Eigen::Index dim,
                        Eigen::Index expm_dim = 0 /* default 2*dim */);

}  // namespace hts::bg
