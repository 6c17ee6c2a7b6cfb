#include "hts/bg.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

#include "hts/hidden_tensor.hpp"

namespace hts::bg {

namespace {

using BigFloat = boost::multiprecision::mpfr_float;

// The extended-precision series assembly scopes the global BigFloat default
// precision, so it holds a lock: concurrent series builds serialize here and
// every other entry point stays freely concurrent.
std::mutex precision_mutex;

struct PrecisionGuard {
  std::lock_guard<std::mutex> lock;
  unsigned saved;
  explicit PrecisionGuard(unsigned digits10)
      : lock(precision_mutex), saved(BigFloat::default_precision()) {
    BigFloat::default_precision(digits10);
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved); }
};

void require_order(std::int64_t order) {
  if (order < 1)
    throw std::invalid_argument("bg: order must be >= 1, got " +
                                std::to_string(order));
}

// Sums the values in place with pairwise (cascade) summation.
double pairwise_sum(std::vector<double>& terms) {
  if (terms.empty()) return 0.0;
  std::size_t count = terms.size();
  while (count > 1) {
    std::size_t half = (count + 1) / 2;
    for (std::size_t i = 0; i + half < count; ++i) terms[i] += terms[i + half];
    count = half;
  }
  return terms[0];
}

double alpha_double(std::int64_t order, std::int64_t j) {
  std::vector<double> terms(static_cast<std::size_t>(j) + 1);
  for (std::int64_t l = 0; l <= j; ++l) {
    const double log_mag =
        -std::lgamma(static_cast<double>(j - l + 1)) +
        0.5 * (std::log1p(static_cast<double>(l / order)) -
               std::lgamma(static_cast<double>(l + 1)) -
               std::lgamma(static_cast<double>(l + order + 1)));
    const double sign = ((j - l) % 2 == 0) ? 1.0 : -1.0;
    terms[static_cast<std::size_t>(l)] = sign * std::exp(log_mag);
  }
  return pairwise_sum(terms);
}

// alpha_0..alpha_cutoff from the defining double sum, at working precision.
std::vector<BigFloat> alpha_table_big(std::int64_t order, std::int64_t cutoff) {
  std::vector<BigFloat> inv_fact(static_cast<std::size_t>(cutoff) + 1);
  inv_fact[0] = 1;
  for (std::int64_t r = 1; r <= cutoff; ++r)
    inv_fact[static_cast<std::size_t>(r)] =
        inv_fact[static_cast<std::size_t>(r - 1)] / r;

  std::vector<BigFloat> sqrt_term(static_cast<std::size_t>(cutoff) + 1);
  BigFloat fact_l = 1;
  BigFloat fact_ln = 1;  // (l+N)!
  for (std::int64_t i = 1; i <= order; ++i) fact_ln *= i;
  for (std::int64_t l = 0; l <= cutoff; ++l) {
    if (l > 0) {
      fact_l *= l;
      fact_ln *= (l + order);
    }
    sqrt_term[static_cast<std::size_t>(l)] =
        sqrt(BigFloat(1 + l / order) / (fact_l * fact_ln));
  }

  std::vector<BigFloat> table(static_cast<std::size_t>(cutoff) + 1);
  for (std::int64_t j = 0; j <= cutoff; ++j) {
    BigFloat sum = 0;
    for (std::int64_t l = 0; l <= j; ++l) {
      BigFloat term = inv_fact[static_cast<std::size_t>(j - l)] *
                      sqrt_term[static_cast<std::size_t>(l)];
      if ((j - l) % 2 != 0) term = -term;
      sum += term;
    }
    table[static_cast<std::size_t>(j)] = sum;
  }
  return table;
}

}  // namespace

Coefficients coefficients(std::int64_t order, std::int64_t cutoff) {
  require_order(order);
  if (cutoff < 0)
    throw std::invalid_argument("bg::coefficients: cutoff must be >= 0");
  Coefficients coeff;
  coeff.order = order;
  coeff.alpha.resize(static_cast<std::size_t>(cutoff) + 1);
  coeff.max_finite_j = -1;
  for (std::int64_t j = 0; j <= cutoff; ++j) {
    const double value = alpha_double(order, j);
    coeff.alpha[static_cast<std::size_t>(j)] = value;
    if (value != 0.0) coeff.max_finite_j = j;
  }
  return coeff;
}

Mat annihilator_tensor(std::int64_t order, Eigen::Index outer_dim) {
  require_order(order);
  if (outer_dim < 2)
    throw std::invalid_argument(
        "bg::annihilator_tensor: outer_dim must be >= 2");
  if (order == 1) return fock::annihilator(outer_dim);
  return embed_left(fock::annihilator(outer_dim),
                    FactorSplit::two_factor(order, outer_dim));
}

Mat annihilator_closed(std::int64_t order, Eigen::Index dim) {
  require_order(order);
  if (dim < order + 1)
    throw std::invalid_argument(
        "bg::annihilator_closed: dim must be >= order+1");
  Mat a = Mat::Zero(dim, dim);
  for (Eigen::Index n = 0; n + order < dim; ++n)
    a(n, n + order) = std::sqrt(static_cast<double>(n / order + 1));
  return a;
}

Mat annihilator_series(std::int64_t order, Eigen::Index dim,
                       std::int64_t cutoff) {
  require_order(order);
  if (dim < order + 1)
    throw std::invalid_argument(
        "bg::annihilator_series: dim must be >= order+1");
  if (cutoff < 0)
    throw std::invalid_argument("bg::annihilator_series: cutoff must be >= 0");

  // Monomials a†^j a^{j+N} vanish on the truncated space once j+N > dim-1.
  const std::int64_t effective =
      std::min<std::int64_t>(cutoff, dim - 1 - order);
  // The alternating entry sums cancel by ~0.5 decimal digits per column
  // (measured); 0.75 digits per column plus slack keeps the result exact to
  // double precision at any dim.
  const unsigned digits10 =
      48 + (3 * static_cast<unsigned>(std::max<std::int64_t>(dim, 1))) / 4;
  PrecisionGuard guard(digits10);
  const std::vector<BigFloat> alpha = alpha_table_big(order, effective);

  Mat a = Mat::Zero(dim, dim);
  for (Eigen::Index n = order; n < dim; ++n) {
    // chain(j) = <n-N| a†^j a^{j+N} |n>, the product of ladder matrix
    // elements along the lowering/raising path. chain(0) collects the N
    // lowering factors sqrt(n)...sqrt(n-N+1); each further j appends one
    // lowering and one raising factor whose product is the integer n-N-j+1.
    BigFloat chain = 1;
    for (std::int64_t t = 0; t < order; ++t) chain *= sqrt(BigFloat(n - t));
    BigFloat entry = 0;
    const std::int64_t j_max = std::min<std::int64_t>(effective, n - order);
    for (std::int64_t j = 0; j <= j_max; ++j) {
      if (j > 0) chain *= (n - order - j + 1);
      entry += alpha[static_cast<std::size_t>(j)] * chain;
    }
    a(n - order, n) = entry.convert_to<double>();
  }
  return a;
}

double compose_deviation(std::int64_t order, std::int64_t order2,
                         Eigen::Index outer_dim) {
  require_order(order);
  require_order(order2);
  const Eigen::Index base_dim = order * outer_dim;
  Mat inner_op = annihilator_closed(order, base_dim);
  Mat composed =
      (order2 == 1)
          ? inner_op
          : embed_left(inner_op, FactorSplit::two_factor(order2, base_dim));
  Mat direct = annihilator_closed(order * order2, base_dim * order2);
  return (composed - direct).cwiseAbs().maxCoeff();
}

double commutator_deviation(std::int64_t order, Eigen::Index dim) {
  require_order(order);
  if (dim <= order)
    throw std::invalid_argument(
        "bg::commutator_deviation: dim must exceed order");
  Mat a = annihilator_closed(order, dim);
  Mat comm = a * a.adjoint() - a.adjoint() * a;
  const Eigen::Index interior = dim - order;
  return (comm.topLeftCorner(interior, interior) -
          Mat::Identity(interior, interior))
      .cwiseAbs()
      .maxCoeff();
}

DisplacedState displace(Complex z, std::int64_t order, Eigen::Index dim,
                        Eigen::Index expm_dim) {
  require_order(order);
  if (dim < 1) throw std::invalid_argument("bg::displace: dim must be >= 1");
  if (expm_dim <= 0) expm_dim = 2 * dim;
  if (expm_dim < dim)
    throw std::invalid_argument("bg::displace: expm_dim must be >= dim");
  expm_dim = std::max<Eigen::Index>(expm_dim, order + 1);

  Mat lower = annihilator_closed(order, expm_dim);
  Mat generator = z * lower.adjoint() - std::conj(z) * lower;
  Mat propagator = generator.exp();
  Vec full = propagator.col(0);

  DisplacedState out;
  out.state = full.head(dim);
  out.norm_deficit = std::max(0.0, 1.0 - out.state.squaredNorm());
  out.leaky = out.norm_deficit > 1e-6;
  return out;
}

}  // namespace hts::bg
