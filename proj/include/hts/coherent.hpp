#pragma once

#include <cstdint>

#include "hts/fock.hpp"

namespace hts::coherent {

/// Coherent amplitude z together with a truncation dimension. Accepted pairs
/// keep the truncated norm deficit 1 - sum_{n<dim} e^{-|z|^2}|z|^{2n}/n!
/// below 1e-10.
struct Params {
  Complex z;
  Eigen::Index dim = 0;
};

/// Poisson weight e^{-|z|^2} |z|^{2n} / n!, evaluated through log-gamma.
double poisson_term(Complex z, std::int64_t n);

/// Probability mass of |z> beyond the first dim components.
double truncation_deficit(Complex z, Eigen::Index dim);

/// Smallest power-of-two dimension with truncation deficit < 1e-12.
Eigen::Index default_dim(Complex z);

/// Amplitudes e^{-|z|^2/2} z^n / sqrt(n!). Throws std::runtime_error naming a
/// sufficient dimension when the deficit bound is violated.
Vec state(const Params& p);

/// (rho_inf)_{kk} = e^{-|z|^2} sum_{l<N} |z|^{2(Nk+l)}/(Nk+l)!.
double outer_pmf(const Params& p, std::int64_t radix, std::int64_t k);

/// (rho_N)_{ll} = e^{-|z|^2} sum_k |z|^{2(Nk+l)}/(Nk+l)!, over Nk+l < dim.
double inner_pmf(const Params& p, std::int64_t radix, std::int64_t l);

/// Outer pmf of the N=2 three-subsystem decomposition; sums the (l1, l0)
/// grid in the same order as outer_pmf with radix 4, so the two agree
/// bit-for-bit.
double three_subsystem_outer_pmf(const Params& p, std::int64_t k);

/// Closed-form 2x2 reduced density matrix of the qubit at `position` (1 or 0)
/// in the N=2 three-subsystem decomposition. dim must be a multiple of 4.
Mat qubit_rho(const Params& p, int position);

}  // namespace hts::coherent
