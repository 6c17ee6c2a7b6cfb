#include "hts/signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hts/hidden_tensor.hpp"

namespace hts::signal {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace

SignalSpec SignalSpec::defaults(int qubits, int periods) {
  if (qubits < 1 || qubits > 20)
    throw std::invalid_argument("SignalSpec: qubits must lie in [1, 20]");
  if (periods < 1)
    throw std::invalid_argument("SignalSpec: periods must be >= 1");
  SignalSpec spec;
  spec.qubits = qubits;
  spec.omega_base = two_pi * 1000.0;
  spec.omega_step = two_pi * 100.0;
  spec.duration = periods * two_pi / spec.omega_step;
  const double step_hz = spec.omega_step / two_pi;
  const double max_hz =
      (spec.omega_base + static_cast<double>(spec.dim()) * spec.omega_step) /
      two_pi;
  // 8x the Nyquist rate, rounded up to a multiple of the frequency quantum so
  // sample_rate * duration stays integral.
  spec.sample_rate = std::ceil(16.0 * max_hz / step_hz) * step_hz;
  spec.validate();
  return spec;
}

Eigen::Index SignalSpec::samples() const {
  return static_cast<Eigen::Index>(std::llround(sample_rate * duration));
}

void SignalSpec::validate() const {
  if (qubits < 1 || qubits > 20)
    throw std::invalid_argument("SignalSpec: qubits must lie in [1, 20]");
  if (!(omega_step > 0.0) || omega_base < 0.0)
    throw std::invalid_argument("SignalSpec: frequencies must be positive");
  const double periods = duration * omega_step / two_pi;
  if (!(duration > 0.0) ||
      std::abs(periods - std::round(periods)) > 1e-9 ||
      std::round(periods) < 1.0)
    throw std::invalid_argument(
        "SignalSpec: duration must be a positive integer number of "
        "2*pi/omega_step periods, got " +
        std::to_string(periods));
  const double count = sample_rate * duration;
  if (std::abs(count - std::round(count)) > 1e-9 || count < 2.0)
    throw std::invalid_argument(
        "SignalSpec: sample_rate * duration must be integral");
  const double nyquist_hz =
      2.0 * (omega_base + static_cast<double>(dim()) * omega_step) / two_pi;
  if (sample_rate <= nyquist_hz)
    throw std::invalid_argument(
        "SignalSpec: sample rate " + std::to_string(sample_rate) +
        " Hz violates the Nyquist bound " + std::to_string(nyquist_hz) +
        " Hz for the highest carrier");
}

Frame encode(const Vec& psi, const SignalSpec& spec) {
  spec.validate();
  if (psi.size() != spec.dim())
    throw std::domain_error("signal::encode: state dimension " +
                            std::to_string(psi.size()) + " is not 2^K = " +
                            std::to_string(spec.dim()));
  const Eigen::Index count = spec.samples();
  Frame frame = Frame::Zero(count);
  for (Eigen::Index n = 0; n < psi.size(); ++n) {
    if (psi(n) == Complex(0.0, 0.0)) continue;
    const double phase_step = spec.carrier(n) / spec.sample_rate;
    for (Eigen::Index m = 0; m < count; ++m)
      frame(m) += psi(n) * std::polar(1.0, phase_step * m);
  }
  return frame;
}

Vec decode(const Frame& frame, const SignalSpec& spec) {
  spec.validate();
  if (frame.size() != spec.samples())
    throw std::domain_error("signal::decode: frame has " +
                            std::to_string(frame.size()) +
                            " samples, spec expects " +
                            std::to_string(spec.samples()));
  const Eigen::Index count = frame.size();
  Vec psi(spec.dim());
  for (Eigen::Index n = 0; n < spec.dim(); ++n) {
    const double phase_step = spec.carrier(n) / spec.sample_rate;
    Complex sum = 0.0;
    for (Eigen::Index m = 0; m < count; ++m)
      sum += frame(m) * std::polar(1.0, -phase_step * m);
    psi(n) = sum / static_cast<double>(count);
  }
  return psi;
}

Frame apply_gate(const Frame& frame, const gates::GateSpec& g,
                 const SignalSpec& spec) {
  const Vec psi = decode(frame, spec);
  return encode(gates::build(g, spec.dim()) * psi, spec);
}

SwapReport swap_fidelity(const Vec& f, const Vec& g, const SignalSpec& spec) {
  if (f.size() != g.size())
    throw std::domain_error("swap_fidelity: factors must have equal dims");
  const Eigen::Index factor_dim = f.size();
  if (factor_dim * factor_dim != spec.dim())
    throw std::domain_error(
        "swap_fidelity: factor dim squared must equal 2^K");
  const FactorSplit split =
      FactorSplit::two_factor(factor_dim, factor_dim);
  const Vec fg = hidden_kron(f, g, split);
  const Vec gf = hidden_kron(g, f, split);
  const Vec fg_decoded = decode(encode(fg, spec), spec);
  const Vec gf_decoded = decode(encode(gf, spec), spec);

  SwapReport report;
  report.roundtrip_error =
      std::max((fg_decoded - fg).cwiseAbs().maxCoeff(),
               (gf_decoded - gf).cwiseAbs().maxCoeff());
  const double norms = fg_decoded.norm() * gf_decoded.norm();
  report.fidelity =
      norms > 0.0 ? std::abs(fg_decoded.dot(gf_decoded)) / norms : 0.0;
  return report;
}

}  // namespace hts::signal
