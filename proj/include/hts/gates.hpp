#pragma once

#include <cstdint>

#include "hts/fock.hpp"

namespace hts::gates {

enum class Kind {
  hadamard,
  pauli_x,
  pauli_y,
  pauli_z,
  custom,            // arbitrary 2x2 unitary
  digit_multiplier,  // |k,l> -> |k, a*l mod N>, requires gcd(a, N) = 1
};

struct GateSpec {
  Kind kind = Kind::hadamard;
  std::size_t position = 0;  // hidden digit index, 0 = least significant
  std::int64_t radix = 2;
  Eigen::Matrix2cd custom = Eigen::Matrix2cd::Identity();
  std::int64_t multiplier = 1;
};

/// Dense unitary realization of the gate on a dim-dimensional space. dim must
/// be divisible by radix^(position+1) so the gate blocks never straddle the
/// truncation boundary; the gate is then exactly unitary.
Mat build(const GateSpec& g, Eigen::Index dim);

/// H_j acting on hidden bit j, e.g. H_0|2k> = (|2k>+|2k+1>)/sqrt(2).
Mat hadamard(std::size_t position, Eigen::Index dim);

/// The piecewise closed form of <n|H_j|z> for j in {0, 1}:
///   <n|H_0|z> = e^{-|z|^2/2}/sqrt2 * (z^n/sqrt(n!) + z^{n+1}/sqrt((n+1)!))
///               for even n, and (z^{n-1}/sqrt((n-1)!) - z^n/sqrt(n!)) for odd;
///   <n|H_1|z> couples n and n+2 within each block of four.
Vec hadamard_on_coherent_closed(Complex z, int position, Eigen::Index dim);

struct GatedCoherent {
  Vec state;              // numeric gate application to the coherent state
  double residual = 0.0;  // max |numeric - closed form|
};

GatedCoherent hadamard_on_coherent(Complex z, int position, Eigen::Index dim);

}  // namespace hts::gates
