#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "hts/bell.hpp"
#include "hts/fock.hpp"
#include "hts/json_io.hpp"
#include "hts/signal.hpp"

using namespace hts;

namespace {

Vec random_state(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v /= v.norm();
  return v;
}

}  // namespace

TEST_CASE("spec validation") {
  const auto spec = signal::SignalSpec::defaults(3);
  CHECK(spec.dim() == 8);
  CHECK(spec.samples() > 0);

  SUBCASE("non-integer period counts are rejected") {
    auto bad = spec;
    bad.duration *= 1.37;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  }
  SUBCASE("sub-Nyquist sampling is rejected") {
    auto bad = spec;
    bad.sample_rate = 2000.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  }
  SUBCASE("multi-period durations are accepted") {
    CHECK_NOTHROW(signal::SignalSpec::defaults(4, 3).validate());
  }
}

TEST_CASE("encoding") {
  const auto spec = signal::SignalSpec::defaults(2);
  SUBCASE("the ground state is a pure baseband tone") {
    const signal::Frame frame = signal::encode(fock::basis_state(0, 4), spec);
    for (Eigen::Index m = 0; m < 16; ++m) {
      const double phase = spec.omega_base * m / spec.sample_rate;
      CHECK(std::abs(frame(m) - std::polar(1.0, phase)) < 1e-13);
    }
  }
  SUBCASE("an equal two-level superposition carries two equal tones") {
    Vec psi = Vec::Zero(4);
    psi(0) = psi(1) = 1.0 / std::sqrt(2.0);
    const Vec decoded = signal::decode(signal::encode(psi, spec), spec);
    CHECK(std::abs(decoded(0) - psi(0)) < 1e-12);
    CHECK(std::abs(decoded(1) - psi(1)) < 1e-12);
    CHECK(std::abs(decoded(2)) < 1e-12);
  }
  SUBCASE("mean signal power equals the squared state norm") {
    std::mt19937_64 rng(3);
    const Vec psi = random_state(rng, 4);
    const signal::Frame frame = signal::encode(psi, spec);
    const double power = frame.squaredNorm() / frame.size();
    CHECK(power == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("decoding") {
  const auto spec = signal::SignalSpec::defaults(3);
  SUBCASE("single carriers project to one-hot states") {
    for (Eigen::Index n = 0; n < spec.dim(); ++n) {
      const Vec decoded =
          signal::decode(signal::encode(fock::basis_state(n, 8), spec), spec);
      for (Eigen::Index m = 0; m < 8; ++m)
        CHECK(std::abs(decoded(m) - (m == n ? 1.0 : 0.0)) < 1e-12);
    }
  }
  SUBCASE("round trip at K = 6 stays under 1e-9") {
    std::mt19937_64 rng(5);
    const auto spec6 = signal::SignalSpec::defaults(6);
    for (int trial = 0; trial < 5; ++trial) {
      const Vec psi = random_state(rng, spec6.dim());
      const Vec back = signal::decode(signal::encode(psi, spec6), spec6);
      CHECK((back - psi).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
  SUBCASE("decoding is linear in the frame") {
    std::mt19937_64 rng(7);
    const Vec psi1 = random_state(rng, 8);
    const Vec psi2 = random_state(rng, 8);
    const signal::Frame f1 = signal::encode(psi1, spec);
    const signal::Frame f2 = signal::encode(psi2, spec);
    const Complex alpha(0.6, -0.2), beta(-1.1, 0.4);
    const Vec combined = signal::decode(alpha * f1 + beta * f2, spec);
    const Vec expected = alpha * signal::decode(f1, spec) +
                         beta * signal::decode(f2, spec);
    CHECK((combined - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("gates through the signal domain") {
  const auto spec = signal::SignalSpec::defaults(3);
  std::mt19937_64 rng(11);
  SUBCASE("identity gate is a pure round trip") {
    gates::GateSpec id;
    id.kind = gates::Kind::digit_multiplier;
    id.multiplier = 1;
    const Vec psi = random_state(rng, 8);
    const auto gated =
        signal::apply_gate(signal::encode(psi, spec), id, spec);
    CHECK((signal::decode(gated, spec) - psi).cwiseAbs().maxCoeff() < 1e-9);
  }
  SUBCASE("H0 on the baseband tone yields the equal two-tone signal") {
    gates::GateSpec h0;
    const auto gated = signal::apply_gate(
        signal::encode(fock::basis_state(0, 8), spec), h0, spec);
    const Vec decoded = signal::decode(gated, spec);
    CHECK(decoded(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(decoded(1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  }
  SUBCASE("signal-domain gates match state-domain gates") {
    gates::GateSpec h1;
    h1.position = 1;
    const Vec psi = random_state(rng, 8);
    const Vec via_signal = signal::decode(
        signal::apply_gate(signal::encode(psi, spec), h1, spec), spec);
    const Vec direct = gates::build(h1, 8) * psi;
    CHECK((via_signal - direct).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("hidden products of signals do not commute") {
  const auto spec = signal::SignalSpec::defaults(2);
  std::mt19937_64 rng(13);
  SUBCASE("f = g has unit fidelity") {
    const Vec f = random_state(rng, 2);
    const auto report = signal::swap_fidelity(f, f, spec);
    CHECK(report.fidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.roundtrip_error < 1e-10);
  }
  SUBCASE("e0 (x) e1 vs e1 (x) e0 are orthogonal") {
    const auto report = signal::swap_fidelity(fock::basis_state(0, 2),
                                              fock::basis_state(1, 2), spec);
    CHECK(report.fidelity < 1e-10);
  }
  SUBCASE("generic factors give fidelity strictly below one") {
    for (int trial = 0; trial < 10; ++trial) {
      const Vec f = random_state(rng, 2);
      const Vec g = random_state(rng, 2);
      if ((f - g).norm() < 1e-3) continue;
      const auto report = signal::swap_fidelity(f, g, spec);
      CHECK(report.fidelity < 1.0 - 1e-6);
    }
  }
}

TEST_CASE("serialization round trips are bit-exact") {
  std::mt19937_64 rng(23);
  SUBCASE("state JSON") {
    const Vec psi = random_state(rng, 12);
    const Vec back = io::state_from_json(io::state_to_json(psi));
    CHECK((back - psi).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("matrix JSON") {
    Mat m(3, 3);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (Eigen::Index r = 0; r < 3; ++r)
      for (Eigen::Index c = 0; c < 3; ++c)
        m(r, c) = Complex(gauss(rng), gauss(rng));
    const Mat back = io::matrix_from_json(io::matrix_to_json(m));
    CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("binary frame with sidecar") {
    const auto spec = signal::SignalSpec::defaults(2);
    const signal::Frame frame = signal::encode(random_state(rng, 4), spec);
    const std::string path = "test_frame_roundtrip.bin";
    io::write_frame(path, frame, spec);
    const auto sidecar =
        io::signal_spec_from_json(io::load_json_argument(path + ".json"));
    CHECK(sidecar.samples() == spec.samples());
    const signal::Frame back = io::read_frame(path, sidecar);
    CHECK((back - frame).cwiseAbs().maxCoeff() == 0.0);
    std::remove(path.c_str());
    std::remove((path + ".json").c_str());
  }
  SUBCASE("gate specs") {
    gates::GateSpec g;
    g.kind = gates::Kind::digit_multiplier;
    g.radix = 7;
    g.multiplier = 3;
    g.position = 1;
    const auto back = io::gate_spec_from_json(io::gate_spec_to_json(g));
    CHECK(back.kind == g.kind);
    CHECK(back.radix == g.radix);
    CHECK(back.multiplier == g.multiplier);
    CHECK(back.position == g.position);
  }
}

TEST_CASE("bell correlations survive the signal representation") {
  const auto spec = signal::SignalSpec::defaults(3);
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::VectorXcd w(2);
    w << Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng));
    w /= w.norm();
    const Vec psi = bell::singlet(w, 8);
    const Vec through = signal::decode(signal::encode(psi, spec), spec);
    Eigen::Vector3d a, b;
    a << gauss(rng), gauss(rng), gauss(rng);
    b << gauss(rng), gauss(rng), gauss(rng);
    a.normalize();
    b.normalize();
    CHECK(std::abs(bell::correlation(through, a, b) + a.dot(b)) < 1e-6);
  }
}
