#include "hts/hidden_tensor.hpp"

#include <stdexcept>
#include <string>

namespace hts {

namespace {

void require_dim(const Vec& psi, const FactorSplit& split, const char* who) {
  if (psi.size() != split.dim())
    throw std::domain_error(std::string(who) + ": state dimension " +
                            std::to_string(psi.size()) +
                            " does not match split dimension " +
                            std::to_string(split.dim()));
}

void require_square(const Mat& op, Eigen::Index dim, const char* who) {
  if (op.rows() != dim || op.cols() != dim)
    throw std::domain_error(std::string(who) + ": operator is " +
                            std::to_string(op.rows()) + "x" +
                            std::to_string(op.cols()) + ", expected " +
                            std::to_string(dim) + "x" + std::to_string(dim));
}

// Stride of the digit at `position`: product of radices below it.
Eigen::Index digit_stride(const FactorSplit& split, std::size_t position) {
  Eigen::Index stride = 1;
  for (std::size_t i = 0; i < position; ++i)
    stride *= static_cast<Eigen::Index>(
        split.radices[split.radices.size() - 1 - i]);
  return stride;
}

}  // namespace

FactorSplit FactorSplit::two_factor(std::int64_t inner_radix,
                                    Eigen::Index outer_dim) {
  FactorSplit split;
  split.outer_dim = outer_dim;
  split.radices = {inner_radix};
  split.validate();
  return split;
}

FactorSplit FactorSplit::multi(std::int64_t radix, std::size_t num_levels,
                               Eigen::Index outer_dim) {
  FactorSplit split;
  split.outer_dim = outer_dim;
  split.radices.assign(num_levels, radix);
  split.validate();
  return split;
}

Eigen::Index FactorSplit::inner_dim() const {
  Eigen::Index prod = 1;
  for (std::int64_t radix : radices) prod *= static_cast<Eigen::Index>(radix);
  return prod;
}

Eigen::Index FactorSplit::dim() const { return outer_dim * inner_dim(); }

bool FactorSplit::uniform() const {
  for (std::int64_t radix : radices)
    if (radix != radices.front()) return false;
  return true;
}

void FactorSplit::validate() const {
  if (outer_dim < 1)
    throw std::invalid_argument("FactorSplit: outer dimension must be >= 1");
  if (radices.empty())
    throw std::invalid_argument("FactorSplit: at least one radix is required");
  for (std::int64_t radix : radices)
    if (radix < 2)
      throw std::invalid_argument("FactorSplit: radix " +
                                  std::to_string(radix) + " must be >= 2");
}

Vec hidden_kron(const Vec& outer, const Vec& inner, const FactorSplit& split) {
  split.validate();
  if (outer.size() != split.outer_dim)
    throw std::domain_error("hidden_kron: outer factor has dim " +
                            std::to_string(outer.size()) + ", split expects " +
                            std::to_string(split.outer_dim));
  if (inner.size() != split.inner_dim())
    throw std::domain_error("hidden_kron: inner factor has dim " +
                            std::to_string(inner.size()) + ", split expects " +
                            std::to_string(split.inner_dim()));
  const Eigen::Index inner_dim = split.inner_dim();
  Vec out(split.dim());
  for (Eigen::Index n = 0; n < out.size(); ++n)
    out(n) = outer(n / inner_dim) * inner(n % inner_dim);
  return out;
}

Mat embed_left(const Mat& op, const FactorSplit& split) {
  split.validate();
  require_square(op, split.outer_dim, "embed_left");
  const Eigen::Index inner = split.inner_dim();
  Mat out = Mat::Zero(split.dim(), split.dim());
  for (Eigen::Index k = 0; k < split.outer_dim; ++k)
    for (Eigen::Index kp = 0; kp < split.outer_dim; ++kp)
      for (Eigen::Index l = 0; l < inner; ++l)
        out(inner * k + l, inner * kp + l) = op(k, kp);
  return out;
}

Mat embed_right(const Mat& op, const FactorSplit& split) {
  split.validate();
  require_square(op, split.inner_dim(), "embed_right");
  const Eigen::Index inner = split.inner_dim();
  Mat out = Mat::Zero(split.dim(), split.dim());
  for (Eigen::Index k = 0; k < split.outer_dim; ++k)
    for (Eigen::Index l = 0; l < inner; ++l)
      for (Eigen::Index lp = 0; lp < inner; ++lp)
        out(inner * k + l, inner * k + lp) = op(l, lp);
  return out;
}

Mat embed_at(const Mat& op, std::size_t position, const FactorSplit& split) {
  split.validate();
  if (!split.uniform())
    throw std::invalid_argument("embed_at: only uniform splits are supported");
  if (position >= split.levels())
    throw std::domain_error("embed_at: position " + std::to_string(position) +
                            " out of range for " +
                            std::to_string(split.levels()) + " levels");
  const auto radix = static_cast<Eigen::Index>(split.radices.front());
  require_square(op, radix, "embed_at");
  const Eigen::Index stride = digit_stride(split, position);
  Mat out = Mat::Zero(split.dim(), split.dim());
  for (Eigen::Index n = 0; n < split.dim(); ++n) {
    const Eigen::Index digit = (n / stride) % radix;
    for (Eigen::Index dp = 0; dp < radix; ++dp)
      out(n + (dp - digit) * stride, n) = op(dp, digit);
  }
  return out;
}

Mat reduce_left(const Vec& psi, const FactorSplit& split) {
  split.validate();
  require_dim(psi, split, "reduce_left");
  const Eigen::Index inner = split.inner_dim();
  Mat rho = Mat::Zero(split.outer_dim, split.outer_dim);
  for (Eigen::Index k = 0; k < split.outer_dim; ++k)
    for (Eigen::Index kp = 0; kp < split.outer_dim; ++kp) {
      Complex sum = 0.0;
      for (Eigen::Index l = 0; l < inner; ++l)
        sum += psi(inner * k + l) * std::conj(psi(inner * kp + l));
      rho(k, kp) = sum;
    }
  return rho;
}

Mat reduce_right(const Vec& psi, const FactorSplit& split) {
  split.validate();
  require_dim(psi, split, "reduce_right");
  const Eigen::Index inner = split.inner_dim();
  Mat rho = Mat::Zero(inner, inner);
  for (Eigen::Index l = 0; l < inner; ++l)
    for (Eigen::Index lp = 0; lp < inner; ++lp) {
      Complex sum = 0.0;
      for (Eigen::Index k = 0; k < split.outer_dim; ++k)
        sum += psi(inner * k + l) * std::conj(psi(inner * k + lp));
      rho(l, lp) = sum;
    }
  return rho;
}

Mat reduce_at(const Vec& psi, std::size_t position, const FactorSplit& split) {
  split.validate();
  require_dim(psi, split, "reduce_at");
  if (!split.uniform())
    throw std::invalid_argument("reduce_at: only uniform splits are supported");
  if (position >= split.levels())
    throw std::domain_error("reduce_at: position " + std::to_string(position) +
                            " out of range for " +
                            std::to_string(split.levels()) + " levels");
  const auto radix = static_cast<Eigen::Index>(split.radices.front());
  const Eigen::Index stride = digit_stride(split, position);
  Mat rho = Mat::Zero(radix, radix);
  for (Eigen::Index n = 0; n < split.dim(); ++n) {
    const Eigen::Index digit = (n / stride) % radix;
    for (Eigen::Index dp = 0; dp < radix; ++dp)
      rho(digit, dp) += psi(n) * std::conj(psi(n + (dp - digit) * stride));
  }
  return rho;
}

SchmidtResult schmidt_classify(const Vec& psi, const FactorSplit& split,
                               double rel_tol) {
  split.validate();
  require_dim(psi, split, "schmidt_classify");
  const Eigen::Index inner = split.inner_dim();
  Mat amplitudes(split.outer_dim, inner);
  for (Eigen::Index k = 0; k < split.outer_dim; ++k)
    for (Eigen::Index l = 0; l < inner; ++l)
      amplitudes(k, l) = psi(inner * k + l);
  Eigen::JacobiSVD<Mat> svd(amplitudes);
  SchmidtResult result;
  result.singular_values = svd.singularValues();
  const double top = result.singular_values.size() > 0
                         ? result.singular_values(0)
                         : 0.0;
  Eigen::Index significant = 0;
  for (Eigen::Index i = 0; i < result.singular_values.size(); ++i)
    if (result.singular_values(i) > rel_tol * top) ++significant;
  result.product = (significant == 1);
  return result;
}

double compose_identity_check(const Mat& op, std::int64_t n1, std::int64_t n0) {
  if (op.rows() != op.cols())
    throw std::domain_error("compose_identity_check: operator must be square");
  const Eigen::Index outer = op.rows();
  const FactorSplit first = FactorSplit::two_factor(n1, outer);
  const FactorSplit second =
      FactorSplit::two_factor(n0, first.dim());
  const FactorSplit combined = FactorSplit::two_factor(n1 * n0, outer);
  Mat nested = embed_left(embed_left(op, first), second);
  Mat direct = embed_left(op, combined);
  return (nested - direct).cwiseAbs().maxCoeff();
}

}  // namespace hts
