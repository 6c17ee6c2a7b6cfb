#include "hts/json_io.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

namespace hts::io {

static_assert(std::endian::native == std::endian::little,
              "frame files are little-endian");

namespace {

std::vector<double> interleave(const Complex* data, Eigen::Index count) {
  std::vector<double> out(static_cast<std::size_t>(2 * count));
  for (Eigen::Index i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(2 * i)] = data[i].real();
    out[static_cast<std::size_t>(2 * i) + 1] = data[i].imag();
  }
  return out;
}

}  // namespace

json state_to_json(const Vec& v) {
  json j;
  j["dim"] = v.size();
  j["re_im"] = interleave(v.data(), v.size());
  return j;
}

Vec state_from_json(const json& j) {
  const auto dim = j.at("dim").get<Eigen::Index>();
  const auto& flat = j.at("re_im");
  if (dim < 1 || static_cast<Eigen::Index>(flat.size()) != 2 * dim)
    throw std::domain_error("state_from_json: re_im must hold 2*dim values");
  Vec v(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    v(i) = Complex(flat[static_cast<std::size_t>(2 * i)].get<double>(),
                   flat[static_cast<std::size_t>(2 * i) + 1].get<double>());
  return v;
}

json matrix_to_json(const Mat& m) {
  if (m.rows() != m.cols())
    throw std::domain_error("matrix_to_json: matrix must be square");
  json j;
  j["dim"] = m.rows();
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(2 * m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      flat.push_back(m(r, c).real());
      flat.push_back(m(r, c).imag());
    }
  j["re_im"] = std::move(flat);
  return j;
}

Mat matrix_from_json(const json& j) {
  const auto dim = j.at("dim").get<Eigen::Index>();
  const auto& flat = j.at("re_im");
  if (dim < 1 || static_cast<Eigen::Index>(flat.size()) != 2 * dim * dim)
    throw std::domain_error("matrix_from_json: re_im must hold 2*dim^2 values");
  Mat m(dim, dim);
  std::size_t idx = 0;
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) {
      m(r, c) = Complex(flat[idx].get<double>(), flat[idx + 1].get<double>());
      idx += 2;
    }
  return m;
}

json signal_spec_to_json(const signal::SignalSpec& spec) {
  json j;
  j["K"] = spec.qubits;
  j["T"] = spec.duration;
  j["delta_omega"] = spec.omega_step;
  j["omega_b"] = spec.omega_base;
  j["sample_rate"] = spec.sample_rate;
  return j;
}

signal::SignalSpec signal_spec_from_json(const json& j) {
  signal::SignalSpec spec;
  spec.qubits = j.at("K").get<int>();
  spec.duration = j.at("T").get<double>();
  spec.omega_step = j.at("delta_omega").get<double>();
  spec.omega_base = j.at("omega_b").get<double>();
  spec.sample_rate = j.at("sample_rate").get<double>();
  spec.validate();
  return spec;
}

namespace {

const char* kind_name(gates::Kind kind) {
  switch (kind) {
    case gates::Kind::hadamard: return "hadamard";
    case gates::Kind::pauli_x: return "pauli_x";
    case gates::Kind::pauli_y: return "pauli_y";
    case gates::Kind::pauli_z: return "pauli_z";
    case gates::Kind::custom: return "custom";
    case gates::Kind::digit_multiplier: return "digit_multiplier";
  }
  throw std::logic_error("kind_name: unreachable");
}

gates::Kind kind_from_name(const std::string& name) {
  if (name == "hadamard") return gates::Kind::hadamard;
  if (name == "pauli_x") return gates::Kind::pauli_x;
  if (name == "pauli_y") return gates::Kind::pauli_y;
  if (name == "pauli_z") return gates::Kind::pauli_z;
  if (name == "custom") return gates::Kind::custom;
  if (name == "digit_multiplier") return gates::Kind::digit_multiplier;
  throw std::invalid_argument("unknown gate kind: " + name);
}

}  // namespace

json gate_spec_to_json(const gates::GateSpec& g) {
  json j;
  j["kind"] = kind_name(g.kind);
  j["position"] = g.position;
  j["radix"] = g.radix;
  if (g.kind == gates::Kind::digit_multiplier) j["multiplier"] = g.multiplier;
  if (g.kind == gates::Kind::custom) {
    std::vector<double> flat;
    for (Eigen::Index r = 0; r < 2; ++r)
      for (Eigen::Index c = 0; c < 2; ++c) {
        flat.push_back(g.custom(r, c).real());
        flat.push_back(g.custom(r, c).imag());
      }
    j["re_im"] = std::move(flat);
  }
  return j;
}

gates::GateSpec gate_spec_from_json(const json& j) {
  gates::GateSpec g;
  g.kind = kind_from_name(j.at("kind").get<std::string>());
  g.position = j.value("position", std::size_t{0});
  g.radix = j.value("radix", std::int64_t{2});
  g.multiplier = j.value("multiplier", std::int64_t{1});
  if (g.kind == gates::Kind::custom) {
    const auto& flat = j.at("re_im");
    if (flat.size() != 8)
      throw std::domain_error("gate re_im must hold 8 values for a 2x2 gate");
    std::size_t idx = 0;
    for (Eigen::Index r = 0; r < 2; ++r)
      for (Eigen::Index c = 0; c < 2; ++c) {
        g.custom(r, c) = Complex(flat[idx].get<double>(),
                                 flat[idx + 1].get<double>());
        idx += 2;
      }
  }
  return g;
}

void write_frame(const std::string& path, const signal::Frame& frame,
                 const signal::SignalSpec& spec) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_frame: cannot open " + path);
  const std::vector<double> flat = interleave(frame.data(), frame.size());
  out.write(reinterpret_cast<const char*>(flat.data()),
            static_cast<std::streamsize>(flat.size() * sizeof(double)));
  if (!out) throw std::runtime_error("write_frame: short write to " + path);

  std::ofstream sidecar(path + ".json");
  if (!sidecar)
    throw std::runtime_error("write_frame: cannot open " + path + ".json");
  sidecar << signal_spec_to_json(spec).dump(2) << "\n";
}

signal::Frame read_frame(const std::string& path,
                         const signal::SignalSpec& spec) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_frame: cannot open " + path);
  const Eigen::Index count = spec.samples();
  std::vector<double> flat(static_cast<std::size_t>(2 * count));
  in.read(reinterpret_cast<char*>(flat.data()),
          static_cast<std::streamsize>(flat.size() * sizeof(double)));
  if (in.gcount() !=
      static_cast<std::streamsize>(flat.size() * sizeof(double)))
    throw std::runtime_error("read_frame: " + path + " holds fewer than " +
                             std::to_string(count) + " samples");
  signal::Frame frame(count);
  for (Eigen::Index i = 0; i < count; ++i)
    frame(i) = Complex(flat[static_cast<std::size_t>(2 * i)],
                       flat[static_cast<std::size_t>(2 * i) + 1]);
  return frame;
}

json load_json_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    return json::parse(text);
  }
  std::ifstream in(text);
  if (!in)
    throw std::runtime_error("cannot open JSON file: " + text);
  json j;
  in >> j;
  return j;
}

}  // namespace hts::io
