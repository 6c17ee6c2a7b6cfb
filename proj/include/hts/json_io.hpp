#pragma once

#include <json.hpp>
#include <string>

#include "hts/fock.hpp"
#include "hts/gates.hpp"
#include "hts/signal.hpp"

namespace hts::io {

using nlohmann::json;

/// {"dim": D, "re_im": [re0, im0, re1, im1, ...]}
json state_to_json(const Vec& v);
Vec state_from_json(const json& j);

/// {"dim": d, "re_im": [...]} with d*d row-major interleaved entries.
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

/// {"K":..., "T":..., "delta_omega":..., "omega_b":..., "sample_rate":...}
json signal_spec_to_json(const signal::SignalSpec& spec);
signal::SignalSpec signal_spec_from_json(const json& j);

/// {"kind": "hadamard"|"pauli_x"|"pauli_y"|"pauli_z"|"custom"|
///  "digit_multiplier", "position":..., "radix":..., "multiplier":...,
///  "re_im": [8 doubles, custom only]}
json gate_spec_to_json(const gates::GateSpec& g);
gates::GateSpec gate_spec_from_json(const json& j);

/// Raw little-endian float64 samples, interleaved re/im. The JSON sidecar
/// (path + ".json") carries the SignalSpec header.
void write_frame(const std::string& path, const signal::Frame& frame,
                 const signal::SignalSpec& spec);
signal::Frame read_frame(const std::string& path,
                         const signal::SignalSpec& spec);

/// Parses `text` as inline JSON when it looks like one, otherwise reads the
/// file at that path.
json load_json_argument(const std::string& text);

}  // namespace hts::io
