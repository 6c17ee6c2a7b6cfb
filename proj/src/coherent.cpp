#include "hts/coherent.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hts::coherent {

namespace {

void require_params(const Params& p, const char* who) {
  if (p.dim < 1)
    throw std::invalid_argument(std::string(who) + ": dim must be >= 1");
  const double deficit = truncation_deficit(p.z, p.dim);
  if (deficit > 1e-10)
    throw std::runtime_error(
        std::string(who) + ": truncation deficit " + std::to_string(deficit) +
        " exceeds 1e-10 at dim " + std::to_string(p.dim) + "; dim " +
        std::to_string(default_dim(p.z)) + " is sufficient");
}

}  // namespace

double poisson_term(Complex z, std::int64_t n) {
  const double mean = std::norm(z);
  if (mean == 0.0) return n == 0 ? 1.0 : 0.0;
  return std::exp(-mean + static_cast<double>(n) * std::log(mean) -
                  std::lgamma(static_cast<double>(n) + 1.0));
}

double truncation_deficit(Complex z, Eigen::Index dim) {
  if (dim < 1)
    throw std::invalid_argument("truncation_deficit: dim must be >= 1");
  // Tail sum; terms decay factorially once n exceeds |z|^2.
  double tail = 0.0;
  for (std::int64_t n = dim; n < dim + 200000; ++n) {
    const double term = poisson_term(z, n);
    tail += term;
    if (static_cast<double>(n) > std::norm(z) && term < 1e-30) break;
  }
  return tail;
}

Eigen::Index default_dim(Complex z) {
  for (Eigen::Index dim = 8;; dim *= 2) {
    if (truncation_deficit(z, dim) < 1e-12) return dim;
    if (dim > (Eigen::Index(1) << 24))
      throw std::runtime_error("default_dim: |z| too large for a practical "
                               "truncation");
  }
}

Vec state(const Params& p) {
  require_params(p, "coherent::state");
  Vec psi(p.dim);
  psi(0) = std::exp(-0.5 * std::norm(p.z));
  for (Eigen::Index n = 1; n < p.dim; ++n)
    psi(n) = psi(n - 1) * p.z / std::sqrt(static_cast<double>(n));
  return psi;
}

double outer_pmf(const Params& p, std::int64_t radix, std::int64_t k) {
  if (radix < 1) throw std::invalid_argument("outer_pmf: radix must be >= 1");
  if (k < 0) throw std::domain_error("outer_pmf: k must be >= 0");
  require_params(p, "coherent::outer_pmf");
  double sum = 0.0;
  for (std::int64_t l = 0; l < radix; ++l)
    sum += poisson_term(p.z, radix * k + l);
  return sum;
}

double inner_pmf(const Params& p, std::int64_t radix, std::int64_t l) {
  if (radix < 1) throw std::invalid_argument("inner_pmf: radix must be >= 1");
  if (l < 0 || l >= radix)
    throw std::domain_error("inner_pmf: l must lie in [0, radix)");
  require_params(p, "coherent::inner_pmf");
  double sum = 0.0;
  for (std::int64_t n = l; n < p.dim; n += radix) sum += poisson_term(p.z, n);
  return sum;
}

double three_subsystem_outer_pmf(const Params& p, std::int64_t k) {
  if (k < 0) throw std::domain_error("three_subsystem_outer_pmf: k must be >= 0");
  require_params(p, "coherent::three_subsystem_outer_pmf");
  double sum = 0.0;
  for (std::int64_t l1 = 0; l1 < 2; ++l1)
    for (std::int64_t l0 = 0; l0 < 2; ++l0)
      sum += poisson_term(p.z, 4 * k + 2 * l1 + l0);
  return sum;
}

Mat qubit_rho(const Params& p, int position) {
  if (position != 0 && position != 1)
    throw std::invalid_argument("qubit_rho: position must be 0 or 1");
  if (p.dim % 4 != 0)
    throw std::invalid_argument("qubit_rho: dim must be a multiple of 4");
  require_params(p, "coherent::qubit_rho");

  Mat rho = Mat::Zero(2, 2);
  const Complex z = p.z;
  if (position == 1) {
    // rho_{N1}: the held-fixed companion digit is l0, the matrix couples
    // amplitudes n and n+2 with n = 4k+l0.
    for (std::int64_t k = 0; 4 * k + 3 < p.dim; ++k)
      for (std::int64_t l = 0; l < 2; ++l) {
        const std::int64_t n = 4 * k + l;
        const double t = poisson_term(z, n);
        const double denom = static_cast<double>((n + 1) * (n + 2));
        rho(0, 0) += t;
        rho(0, 1) += t * std::conj(z) * std::conj(z) / std::sqrt(denom);
        rho(1, 0) += t * z * z / std::sqrt(denom);
        rho(1, 1) += t * std::norm(z) * std::norm(z) / denom;
      }
  } else {
    // rho_{N0}: couples neighbours n and n+1 with n = 4k+2*l1.
    for (std::int64_t k = 0; 4 * k + 3 < p.dim; ++k)
      for (std::int64_t l = 0; l < 2; ++l) {
        const std::int64_t n = 4 * k + 2 * l;
        const double t = poisson_term(z, n);
        const double denom = static_cast<double>(n + 1);
        rho(0, 0) += t;
        rho(0, 1) += t * std::conj(z) / std::sqrt(denom);
        rho(1, 0) += t * z / std::sqrt(denom);
        rho(1, 1) += t * std::norm(z) / denom;
      }
  }
  return rho;
}

}  // namespace hts::coherent
