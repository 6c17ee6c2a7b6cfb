#pragma once

#include <cstdint>

#include "hts/fock.hpp"
#include "hts/gates.hpp"

namespace hts::signal {

/// Octave-spacing frequency layout: basis index n of a K-qubit state maps to
/// the carrier omega_base + n * omega_step, so the set bits of n select which
/// octave frequencies 2^j * omega_step are present. duration must be an
/// integer number of 2*pi/omega_step periods (exact projection orthogonality)
/// and sample_rate must clear Nyquist for the highest carrier and produce an
/// integral sample count.
struct SignalSpec {
  double omega_base = 0.0;  // rad/s
  double omega_step = 0.0;  // rad/s
  int qubits = 0;           // K
  double sample_rate = 0.0;  // Hz
  double duration = 0.0;     // s

  /// omega_base = 2*pi*1000, omega_step = 2*pi*100, sample rate at 8x the
  /// Nyquist rate of the highest carrier, rounded up to keep the sample count
  /// integral.
  static SignalSpec defaults(int qubits, int periods = 1);

  Eigen::Index dim() const { return Eigen::Index(1) << qubits; }
  Eigen::Index samples() const;
  double carrier(Eigen::Index n) const { return omega_base + n * omega_step; }
  void validate() const;
};

/// Complex analytic-signal samples x(t_m), t_m = m / sample_rate.
using Frame = Eigen::VectorXcd;

/// x(t) = sum_n psi_n exp(i (omega_base + n*omega_step) t).
Frame encode(const Vec& psi, const SignalSpec& spec);

/// psi_n = (1/T) integral x(t) exp(-i (omega_base + n*omega_step) t) dt,
/// as a Riemann sum over the exact integer number of periods.
Vec decode(const Frame& frame, const SignalSpec& spec);

/// decode -> apply the gate -> encode.
Frame apply_gate(const Frame& frame, const gates::GateSpec& g,
                 const SignalSpec& spec);

/// Encodes f (x) g and g (x) f as signals and reports the fidelity
/// |<decode(f(x)g)|decode(g(x)f)>| of the decoded states: generically < 1,
/// demonstrating that commuting function values do not make the hidden
/// tensor product commutative. Factors must have equal dimension d with
/// d*d = 2^K.
struct SwapReport {
  double fidelity = 0.0;
  double roundtrip_error = 0.0;  // worst decode error of the two frames
};
SwapReport swap_fidelity(const Vec& f, const Vec& g, const SignalSpec& spec);

}  // namespace hts::signal
