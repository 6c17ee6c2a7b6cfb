#include "hts/gates.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hts/coherent.hpp"
#include "hts/hidden_tensor.hpp"
#include "hts/spin_parity.hpp"

namespace hts::gates {

namespace {

Eigen::Index block_size(const GateSpec& g) {
  Eigen::Index block = 1;
  for (std::size_t i = 0; i <= g.position; ++i)
    block *= static_cast<Eigen::Index>(g.radix);
  return block;
}

void require_divisible(const GateSpec& g, Eigen::Index dim) {
  if (g.radix < 2)
    throw std::invalid_argument("gate: radix must be >= 2");
  const Eigen::Index block = block_size(g);
  if (dim < block || dim % block != 0)
    throw std::invalid_argument(
        "gate: dimension " + std::to_string(dim) +
        " is not divisible by the gate block size " + std::to_string(block) +
        "; a truncated gate would not be unitary");
}

Mat qubit_gate_matrix(const GateSpec& g) {
  switch (g.kind) {
    case Kind::hadamard: {
      Eigen::Matrix2cd h;
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      h << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
      return h;
    }
    case Kind::pauli_x:
      return parity::pauli(1);
    case Kind::pauli_y:
      return parity::pauli(2);
    case Kind::pauli_z:
      return parity::pauli(3);
    case Kind::custom: {
      if (fock::unitarity_error(g.custom) >= 1e-12)
        throw std::invalid_argument("gate: custom matrix is not unitary");
      return g.custom;
    }
    default:
      throw std::invalid_argument("gate: not a 2x2 gate kind");
  }
}

}  // namespace

Mat build(const GateSpec& g, Eigen::Index dim) {
  require_divisible(g, dim);

  if (g.kind == Kind::digit_multiplier) {
    if (std::gcd(g.multiplier, g.radix) != 1)
      throw std::invalid_argument(
          "gate: digit multiplier " + std::to_string(g.multiplier) +
          " is not coprime with radix " + std::to_string(g.radix) +
          ", the digit map would not be a bijection");
    Eigen::Index stride = 1;
    for (std::size_t i = 0; i < g.position; ++i)
      stride *= static_cast<Eigen::Index>(g.radix);
    const auto radix = static_cast<Eigen::Index>(g.radix);
    const auto mult = static_cast<Eigen::Index>(
        ((g.multiplier % g.radix) + g.radix) % g.radix);
    Mat p = Mat::Zero(dim, dim);
    for (Eigen::Index n = 0; n < dim; ++n) {
      const Eigen::Index digit = (n / stride) % radix;
      const Eigen::Index mapped = (mult * digit) % radix;
      p(n + (mapped - digit) * stride, n) = 1.0;
    }
    return p;
  }

  if (g.radix != 2)
    throw std::invalid_argument("gate: qubit gate kinds require radix 2");
  const FactorSplit split = FactorSplit::multi(
      2, g.position + 1, dim / block_size(g));
  return embed_at(qubit_gate_matrix(g), g.position, split);
}

Mat hadamard(std::size_t position, Eigen::Index dim) {
  GateSpec g;
  g.kind = Kind::hadamard;
  g.position = position;
  return build(g, dim);
}

Vec hadamard_on_coherent_closed(Complex z, int position, Eigen::Index dim) {
  if (position != 0 && position != 1)
    throw std::invalid_argument(
        "hadamard_on_coherent_closed: position must be 0 or 1");
  const Eigen::Index block = position == 0 ? 2 : 4;
  if (dim < block || dim % block != 0)
    throw std::invalid_argument(
        "hadamard_on_coherent_closed: dim must be a multiple of " +
        std::to_string(block));

  // c_n = e^{-|z|^2/2} z^n / sqrt(n!) are exactly the coherent amplitudes;
  // the closed forms are +/- combinations of neighbouring c_n within a block.
  Vec c(dim);
  c(0) = std::exp(-0.5 * std::norm(z));
  for (Eigen::Index n = 1; n < dim; ++n)
    c(n) = c(n - 1) * z / std::sqrt(static_cast<double>(n));

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vec out(dim);
  if (position == 0) {
    for (Eigen::Index n = 0; n < dim; ++n)
      out(n) = (n % 2 == 0) ? inv_sqrt2 * (c(n) + c(n + 1))
                            : inv_sqrt2 * (c(n - 1) - c(n));
  } else {
    for (Eigen::Index n = 0; n < dim; ++n)
      out(n) = (n % 4 < 2) ? inv_sqrt2 * (c(n) + c(n + 2))
                           : inv_sqrt2 * (c(n - 2) - c(n));
  }
  return out;
}

GatedCoherent hadamard_on_coherent(Complex z, int position, Eigen::Index dim) {
  coherent::Params params{z, dim};
  const Vec numeric =
      hadamard(static_cast<std::size_t>(position), dim) *
      coherent::state(params);
  const Vec closed = hadamard_on_coherent_closed(z, position, dim);
  GatedCoherent out;
  out.state = numeric;
  out.residual = (numeric - closed).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace hts::gates
