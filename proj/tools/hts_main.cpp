// Command-line front end: index codecs, hidden-subsystem reductions,
// Brandt-Greenberg operator builders, coherent-state statistics, parity and
// Bloch diagnostics, hidden gates, Bell correlations, the octave-spacing
// signal emulator, and the verify-all acceptance sweep.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hts/acceptance.hpp"
#include "hts/bell.hpp"
#include "hts/bg.hpp"
#include "hts/coherent.hpp"
#include "hts/gates.hpp"
#include "hts/hidden_tensor.hpp"
#include "hts/index_codec.hpp"
#include "hts/json_io.hpp"
#include "hts/signal.hpp"
#include "hts/spin_parity.hpp"
#include "hts/version.hpp"

namespace {

using hts::io::json;

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) values.push_back(std::stoll(item));
  }
  if (values.empty())
    throw CLI::ValidationError("expected a comma-separated integer list, got '" +
                               text + "'");
  return values;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) values.push_back(std::stod(item));
  }
  return values;
}

hts::Complex parse_complex(const std::string& text) {
  const auto parts = parse_double_list(text);
  if (parts.size() == 1) return {parts[0], 0.0};
  if (parts.size() == 2) return {parts[0], parts[1]};
  throw CLI::ValidationError("expected 're' or 're,im', got '" + text + "'");
}

hts::RadixSpec make_radix_spec(const std::string& radix_text,
                               std::size_t levels) {
  const auto radices = parse_int_list(radix_text);
  hts::RadixSpec spec;
  if (radices.size() == 1 && levels > 1) {
    spec = hts::RadixSpec::uniform(radices[0], levels);
  } else {
    spec.levels = radices;
  }
  spec.validate();
  return spec;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << j.dump(2) << "\n";
}

json tuple_to_json(const hts::IndexTuple& t, bool with_k) {
  json j;
  j["digits"] = t.digits;
  if (with_k) j["k"] = t.k;
  j["n"] = t.n;
  return j;
}

// Zero-pads a state to the next multiple of `block` so a FactorSplit exists.
hts::Vec pad_to_block(const hts::Vec& psi, Eigen::Index block) {
  const Eigen::Index padded =
      ((psi.size() + block - 1) / block) * block;
  if (padded == psi.size()) return psi;
  hts::Vec out = hts::Vec::Zero(padded);
  out.head(psi.size()) = psi;
  return out;
}

Eigen::Vector3d direction_from_degrees(double degrees) {
  const double rad = degrees * std::numbers::pi / 180.0;
  return {std::sin(rad), 0.0, std::cos(rad)};
}

std::uint64_t resolve_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("HIDDEN_TENSOR_SEED")) {
    return std::stoull(env);
  }
  return cli_seed;
}

int run(int argc, char** argv) {
  std::string command_line;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) command_line += ' ';
    command_line += argv[i];
  }

  CLI::App app{"hidden tensor structure toolkit " +
               std::string(hts::version)};
  app.require_subcommand(1);

  // ---- encode / decode / digits -------------------------------------------
  std::int64_t arg_n = 0;
  std::string arg_radix = "2";
  std::size_t arg_levels = 1;
  std::string arg_out;

  auto* cmd_encode = app.add_subcommand(
      "encode", "Decompose n into (k, digits). Example: encode --n 17 "
                "--radix 3  ->  k=5, digits=[2]");
  cmd_encode->add_option("--n", arg_n, "index to decompose")->required();
  cmd_encode->add_option("--radix", arg_radix,
                         "radix, or comma-separated mixed radices");
  cmd_encode->add_option("--levels", arg_levels, "digit count for uniform radix");
  cmd_encode->add_option("--out", arg_out, "output file (default stdout)");
  cmd_encode->callback([&] {
    const auto spec = make_radix_spec(arg_radix, arg_levels);
    emit(tuple_to_json(hts::encode(arg_n, spec), spec.leading_factor),
         arg_out);
  });

  std::int64_t arg_k = 0;
  std::string arg_digits = "0";
  auto* cmd_decode = app.add_subcommand(
      "decode", "Recompose n from (k, digits). Example: decode --k 5 "
                "--digits 2 --radix 3  ->  n=17");
  cmd_decode->add_option("--k", arg_k, "leading factor")->required();
  cmd_decode->add_option("--digits", arg_digits, "comma-separated digits")
      ->required();
  cmd_decode->add_option("--radix", arg_radix,
                         "radix, or comma-separated mixed radices");
  cmd_decode->add_option("--out", arg_out, "output file (default stdout)");
  cmd_decode->callback([&] {
    hts::IndexTuple t;
    t.k = arg_k;
    t.digits = parse_int_list(arg_digits);
    const auto spec = make_radix_spec(arg_radix, t.digits.size());
    t.n = hts::decode(t, spec);
    emit(tuple_to_json(t, true), arg_out);
  });

  auto* cmd_digits = app.add_subcommand(
      "digits", "Minimal base-N digits of n. Example: digits --n 17 "
                "--radix 2  ->  [1,0,0,0,1]");
  std::int64_t arg_digit_radix = 2;
  cmd_digits->add_option("--n", arg_n, "index")->required();
  cmd_digits->add_option("--radix", arg_digit_radix, "radix");
  cmd_digits->add_option("--out", arg_out, "output file (default stdout)");
  cmd_digits->callback([&] {
    json j;
    j["digits"] = hts::fockian_digits(arg_n, arg_digit_radix);
    j["n"] = arg_n;
    j["radix"] = arg_digit_radix;
    emit(j, arg_out);
  });

  // ---- reduce / classify ---------------------------------------------------
  std::string arg_state;
  std::int64_t arg_single_radix = 2;
  std::size_t arg_split_levels = 1;
  std::string arg_side = "left";
  auto* cmd_reduce = app.add_subcommand(
      "reduce", "Reduced density matrix of a hidden subsystem. Example: "
                "reduce --state psi.json --radix 3 --side left");
  cmd_reduce->add_option("--state", arg_state, "state JSON (inline or file)")
      ->required();
  cmd_reduce->add_option("--radix", arg_single_radix, "inner radix N");
  cmd_reduce->add_option("--levels", arg_split_levels, "inner levels");
  cmd_reduce->add_option("--side", arg_side, "left | right | at:<position>");
  cmd_reduce->add_option("--out", arg_out, "output file (default stdout)");
  cmd_reduce->callback([&] {
    const hts::Vec raw =
        hts::io::state_from_json(hts::io::load_json_argument(arg_state));
    Eigen::Index block = 1;
    for (std::size_t i = 0; i < arg_split_levels; ++i)
      block *= static_cast<Eigen::Index>(arg_single_radix);
    const hts::Vec psi = pad_to_block(raw, block);
    const auto split = hts::FactorSplit::multi(
        arg_single_radix, arg_split_levels, psi.size() / block);
    hts::Mat rho;
    if (arg_side == "left") {
      rho = hts::reduce_left(psi, split);
    } else if (arg_side == "right") {
      rho = hts::reduce_right(psi, split);
    } else if (arg_side.rfind("at:", 0) == 0) {
      rho = hts::reduce_at(psi, std::stoul(arg_side.substr(3)), split);
    } else {
      throw CLI::ValidationError("--side must be left, right, or at:<j>");
    }
    emit(hts::io::matrix_to_json(rho), arg_out);
  });

  double arg_tol = 1e-10;
  auto* cmd_classify = app.add_subcommand(
      "classify", "Schmidt product/entangled verdict. Example: classify "
                  "--state pair.json --radix 3  ->  entangled");
  cmd_classify->add_option("--state", arg_state, "state JSON (inline or file)")
      ->required();
  cmd_classify->add_option("--radix", arg_single_radix, "inner radix N");
  cmd_classify->add_option("--tol", arg_tol, "relative singular value tol");
  cmd_classify->add_option("--out", arg_out, "output file (default stdout)");
  cmd_classify->callback([&] {
    const hts::Vec raw =
        hts::io::state_from_json(hts::io::load_json_argument(arg_state));
    const hts::Vec psi = pad_to_block(raw, arg_single_radix);
    const auto split = hts::FactorSplit::two_factor(
        arg_single_radix, psi.size() / arg_single_radix);
    const auto result = hts::schmidt_classify(psi, split, arg_tol);
    json j;
    j["singular_values"] = std::vector<double>(
        result.singular_values.data(),
        result.singular_values.data() + result.singular_values.size());
    j["verdict"] = result.product ? "product" : "entangled";
    emit(j, arg_out);
  });

  // ---- bg ------------------------------------------------------------------
  std::int64_t arg_order = 2;
  Eigen::Index arg_dim = 24;
  std::string arg_form = "closed";
  std::int64_t arg_cutoff = -1;
  bool arg_check_all = false;
  auto* cmd_bg = app.add_subcommand(
      "bg", "Brandt-Greenberg N-boson ladder operator builders. Example: "
            "bg --order 2 --dim 24 --form closed");
  cmd_bg->add_option("--order", arg_order, "boson order N");
  cmd_bg->add_option("--dim", arg_dim, "truncation dimension");
  cmd_bg->add_option("--form", arg_form, "tensor | closed | series");
  cmd_bg->add_option("--cutoff", arg_cutoff, "series cutoff J (default dim)");
  cmd_bg->add_flag("--check-all", arg_check_all,
                   "emit pairwise deviations of the three forms");
  cmd_bg->add_option("--out", arg_out, "output file (default stdout)");
  cmd_bg->callback([&] {
    const std::int64_t cutoff = arg_cutoff < 0 ? arg_dim : arg_cutoff;
    if (arg_check_all) {
      if (arg_dim % arg_order != 0)
        throw CLI::ValidationError("--dim must be divisible by --order for "
                                   "the tensor form");
      const hts::Mat tensor =
          hts::bg::annihilator_tensor(arg_order, arg_dim / arg_order);
      const hts::Mat closed = hts::bg::annihilator_closed(arg_order, arg_dim);
      const hts::Mat series =
          hts::bg::annihilator_series(arg_order, arg_dim, cutoff);
      const Eigen::Index interior = arg_dim - arg_order;
      const auto interior_gap = [&](const hts::Mat& a, const hts::Mat& b) {
        return (a - b).topLeftCorner(interior, interior).cwiseAbs().maxCoeff();
      };
      json j;
      j["closed_vs_series"] = interior_gap(closed, series);
      j["interior"] = interior;
      j["tensor_vs_closed"] = interior_gap(tensor, closed);
      j["tensor_vs_series"] = interior_gap(tensor, series);
      emit(j, arg_out);
      return;
    }
    hts::Mat a;
    if (arg_form == "tensor") {
      if (arg_dim % arg_order != 0)
        throw CLI::ValidationError("--dim must be divisible by --order for "
                                   "the tensor form");
      a = hts::bg::annihilator_tensor(arg_order, arg_dim / arg_order);
    } else if (arg_form == "closed") {
      a = hts::bg::annihilator_closed(arg_order, arg_dim);
    } else if (arg_form == "series") {
      a = hts::bg::annihilator_series(arg_order, arg_dim, cutoff);
    } else {
      throw CLI::ValidationError("--form must be tensor, closed, or series");
    }
    emit(hts::io::matrix_to_json(a), arg_out);
  });

  std::string arg_z = "0,0";
  Eigen::Index arg_expm_dim = 0;
  auto* cmd_displace = app.add_subcommand(
      "bg-displace", "exp(z A_N† - conj(z) A_N)|0>. Example: bg-displace "
                     "--z 0.5 --order 2 --dim 64");
  cmd_displace->add_option("--z", arg_z, "displacement re or re,im");
  cmd_displace->add_option("--order", arg_order, "boson order N");
  cmd_displace->add_option("--dim", arg_dim, "returned dimension");
  cmd_displace->add_option("--expm-dim", arg_expm_dim,
                           "working dimension for the exponential (default 2*dim)");
  cmd_displace->add_option("--out", arg_out, "output file (default stdout)");
  cmd_displace->callback([&] {
    const auto displaced = hts::bg::displace(parse_complex(arg_z), arg_order,
                                             arg_dim, arg_expm_dim);
    if (displaced.leaky)
      std::cerr << "warning: truncation leakage " << displaced.norm_deficit
                << " exceeds 1e-6; increase --dim\n";
    json j = hts::io::state_to_json(displaced.state);
    j["norm_deficit"] = displaced.norm_deficit;
    emit(j, arg_out);
  });

  // ---- coherent-stats ------------------------------------------------------
  std::string arg_format = "json";
  auto* cmd_coherent = app.add_subcommand(
      "coherent-stats", "Hidden subsystem statistics of a coherent state. "
                        "Example: coherent-stats --z 1 --radix 2");
  cmd_coherent->add_option("--z", arg_z, "coherent amplitude re or re,im");
  cmd_coherent->add_option("--radix", arg_single_radix, "inner radix N");
  cmd_coherent->add_option("--levels", arg_split_levels,
                           "2 for one inner factor, 3 for the N=2 qubit pair");
  Eigen::Index arg_coherent_dim = 0;
  cmd_coherent->add_option("--dim", arg_coherent_dim,
                           "truncation (default: smallest power of two with "
                           "deficit < 1e-12)");
  cmd_coherent->add_option("--format", arg_format, "json | csv");
  cmd_coherent->add_option("--out", arg_out, "output file (default stdout)");
  cmd_coherent->callback([&] {
    const hts::Complex z = parse_complex(arg_z);
    const Eigen::Index dim =
        arg_coherent_dim > 0 ? arg_coherent_dim : hts::coherent::default_dim(z);
    const hts::coherent::Params p{z, dim};
    const std::int64_t radix =
        arg_split_levels == 3 ? 2 : arg_single_radix;
    std::vector<double> outer;
    for (std::int64_t k = 0; k * radix < dim; ++k)
      outer.push_back(hts::coherent::outer_pmf(p, radix, k));
    std::vector<double> inner;
    for (std::int64_t l = 0; l < radix; ++l)
      inner.push_back(hts::coherent::inner_pmf(p, radix, l));

    if (arg_format == "csv") {
      std::ostringstream csv;
      csv.precision(17);
      csv << "k,probability\n";
      for (std::size_t k = 0; k < outer.size(); ++k)
        csv << k << "," << outer[k] << "\n";
      if (arg_out.empty()) {
        std::cout << csv.str();
      } else {
        std::ofstream out(arg_out);
        if (!out) throw std::runtime_error("cannot open " + arg_out);
        out << csv.str();
      }
      return;
    }

    json j;
    j["dim"] = dim;
    j["inner_pmf"] = inner;
    j["outer_pmf"] = outer;
    j["radix"] = radix;
    j["z"] = {z.real(), z.imag()};
    if (arg_split_levels == 3) {
      if (dim % 4 != 0)
        throw CLI::ValidationError("--levels 3 requires dim divisible by 4");
      std::vector<double> three;
      for (std::int64_t k = 0; 4 * k < dim; ++k)
        three.push_back(hts::coherent::three_subsystem_outer_pmf(p, k));
      j["outer_pmf_three"] = three;
      j["rho_qubit0"] = hts::io::matrix_to_json(hts::coherent::qubit_rho(p, 0));
      j["rho_qubit1"] = hts::io::matrix_to_json(hts::coherent::qubit_rho(p, 1));
    }
    emit(j, arg_out);
  });

  // ---- parity --------------------------------------------------------------
  std::string arg_coeffs;
  double arg_length = 2.0;
  Eigen::Index arg_grid = 4097;
  auto* cmd_parity = app.add_subcommand(
      "parity", "Hidden position density and Bloch vector in the "
                "standing-wave basis. Example: parity --coeffs psi.json "
                "--L 2 --grid 4097 --out density.csv");
  cmd_parity->add_option("--coeffs", arg_coeffs,
                         "coefficient vector JSON (inline or file)")
      ->required();
  cmd_parity->add_option("--L", arg_length, "interval length");
  cmd_parity->add_option("--grid", arg_grid, "grid points (odd)");
  cmd_parity->add_option("--out", arg_out, "CSV output file (default stdout)");
  cmd_parity->callback([&] {
    const hts::Vec coeffs =
        hts::io::state_from_json(hts::io::load_json_argument(arg_coeffs));
    const hts::parity::Grid grid{arg_length, arg_grid};
    const auto [psi0, psi1] = hts::parity::split_components(coeffs, grid);
    const auto density = hts::parity::hidden_density(psi0, psi1);
    const Eigen::VectorXd xs = grid.x();

    std::ostringstream csv;
    csv.precision(17);
    csv << "x,rho,rho_hid,interference\n";
    for (Eigen::Index i = 0; i < grid.points; ++i)
      csv << xs(i) << "," << density.rho(i) << "," << density.rho_hidden(i)
          << "," << density.interference(i) << "\n";
    if (arg_out.empty()) {
      std::cout << csv.str();
    } else {
      std::ofstream out(arg_out);
      if (!out) throw std::runtime_error("cannot open " + arg_out);
      out << csv.str();
    }

    const Eigen::Vector3d s = hts::parity::bloch_vector(coeffs);
    json j;
    j["bloch"] = {s(0), s(1), s(2)};
    j["interference_integral"] =
        hts::parity::integrate(density.interference, grid);
    std::cout << j.dump(2) << "\n";
  });

  // ---- gate ----------------------------------------------------------------
  std::string arg_gate;
  auto* cmd_gate = app.add_subcommand(
      "gate", "Apply a hidden gate to a state. Example: gate --spec "
              "'{\"kind\":\"hadamard\",\"position\":0}' --state psi.json");
  cmd_gate->add_option("--spec", arg_gate, "gate spec JSON (inline or file)")
      ->required();
  cmd_gate->add_option("--state", arg_state, "state JSON (inline or file)")
      ->required();
  cmd_gate->add_option("--out", arg_out, "output file (default stdout)");
  cmd_gate->callback([&] {
    const auto g =
        hts::io::gate_spec_from_json(hts::io::load_json_argument(arg_gate));
    const hts::Vec psi =
        hts::io::state_from_json(hts::io::load_json_argument(arg_state));
    emit(hts::io::state_to_json(hts::gates::build(g, psi.size()) * psi),
         arg_out);
  });

  // ---- bell ----------------------------------------------------------------
  std::string arg_angles = "0,90,45,135";
  std::string arg_weights;
  auto* cmd_bell = app.add_subcommand(
      "bell", "Hidden-singlet correlations and CHSH. Example: bell --angles "
              "0,90,45,135  ->  S = 2.828427...");
  cmd_bell->add_option("--angles", arg_angles,
                       "degrees a,a',b,b' in the x-z plane");
  cmd_bell->add_option("--weights", arg_weights,
                       "outer weight vector JSON (inline or file); "
                       "normalized before use");
  Eigen::Index arg_bell_dim = 32;
  cmd_bell->add_option("--dim", arg_bell_dim, "state dimension (multiple of 4)");
  cmd_bell->add_option("--out", arg_out, "output file (default stdout)");
  cmd_bell->callback([&] {
    const auto angles = parse_double_list(arg_angles);
    if (angles.size() != 4)
      throw CLI::ValidationError("--angles needs four comma-separated values");
    Eigen::VectorXcd weights;
    if (arg_weights.empty()) {
      weights = hts::bell::geometric_weights(arg_bell_dim / 4);
    } else {
      weights = hts::io::state_from_json(
          hts::io::load_json_argument(arg_weights));
      weights /= weights.norm();
    }
    const hts::Vec psi = hts::bell::singlet(weights, arg_bell_dim);
    const auto a = direction_from_degrees(angles[0]);
    const auto ap = direction_from_degrees(angles[1]);
    const auto b = direction_from_degrees(angles[2]);
    const auto bp = direction_from_degrees(angles[3]);
    json j;
    j["E"] = {{"ab", hts::bell::correlation(psi, a, b)},
              {"abp", hts::bell::correlation(psi, a, bp)},
              {"apb", hts::bell::correlation(psi, ap, b)},
              {"apbp", hts::bell::correlation(psi, ap, bp)}};
    j["S"] = hts::bell::chsh(psi, a, ap, b, bp);
    emit(j, arg_out);
  });

  // ---- signal --------------------------------------------------------------
  auto* cmd_signal = app.add_subcommand(
      "signal", "Octave-spacing classical signal emulation");
  cmd_signal->require_subcommand(1);
  std::string arg_spec_file;
  std::string arg_in;
  int arg_qubits = 3;
  int arg_periods = 1;

  auto load_spec = [&]() {
    if (!arg_spec_file.empty())
      return hts::io::signal_spec_from_json(
          hts::io::load_json_argument(arg_spec_file));
    return hts::signal::SignalSpec::defaults(arg_qubits, arg_periods);
  };

  auto* cmd_sig_spec = cmd_signal->add_subcommand(
      "spec", "Print the default spec. Example: signal spec --qubits 6");
  cmd_sig_spec->add_option("--qubits", arg_qubits, "qubit count K");
  cmd_sig_spec->add_option("--periods", arg_periods, "duration in base periods");
  cmd_sig_spec->add_option("--out", arg_out, "output file (default stdout)");
  cmd_sig_spec->callback([&] {
    emit(hts::io::signal_spec_to_json(
             hts::signal::SignalSpec::defaults(arg_qubits, arg_periods)),
         arg_out);
  });

  auto* cmd_sig_encode = cmd_signal->add_subcommand(
      "encode", "State -> waveform. Example: signal encode --qubits 3 "
                "--state psi.json --out frame.bin");
  cmd_sig_encode->add_option("--spec-file", arg_spec_file, "spec JSON");
  cmd_sig_encode->add_option("--qubits", arg_qubits, "qubit count if no spec");
  cmd_sig_encode->add_option("--state", arg_state, "state JSON")->required();
  cmd_sig_encode
      ->add_option("--out", arg_out, "binary frame output (sidecar .json)")
      ->required();
  cmd_sig_encode->callback([&] {
    const auto spec = load_spec();
    const hts::Vec psi =
        hts::io::state_from_json(hts::io::load_json_argument(arg_state));
    hts::io::write_frame(arg_out, hts::signal::encode(psi, spec), spec);
    json j;
    j["out"] = arg_out;
    j["samples"] = spec.samples();
    std::cout << j.dump(2) << "\n";
  });

  auto* cmd_sig_decode = cmd_signal->add_subcommand(
      "decode", "Waveform -> state. Example: signal decode --in frame.bin");
  cmd_sig_decode->add_option("--spec-file", arg_spec_file,
                             "spec JSON (default: <in>.json sidecar)");
  cmd_sig_decode->add_option("--in", arg_in, "binary frame input")->required();
  cmd_sig_decode->add_option("--out", arg_out, "output file (default stdout)");
  cmd_sig_decode->callback([&] {
    if (arg_spec_file.empty()) arg_spec_file = arg_in + ".json";
    const auto spec = hts::io::signal_spec_from_json(
        hts::io::load_json_argument(arg_spec_file));
    const auto frame = hts::io::read_frame(arg_in, spec);
    emit(hts::io::state_to_json(hts::signal::decode(frame, spec)), arg_out);
  });

  auto* cmd_sig_gate = cmd_signal->add_subcommand(
      "gate", "Apply a gate in the signal representation. Example: signal "
              "gate --in frame.bin --gate '{\"kind\":\"hadamard\"}' --out "
              "gated.bin");
  cmd_sig_gate->add_option("--spec-file", arg_spec_file,
                           "spec JSON (default: <in>.json sidecar)");
  cmd_sig_gate->add_option("--in", arg_in, "binary frame input")->required();
  cmd_sig_gate->add_option("--gate", arg_gate, "gate spec JSON")->required();
  cmd_sig_gate->add_option("--out", arg_out, "binary frame output")
      ->required();
  cmd_sig_gate->callback([&] {
    if (arg_spec_file.empty()) arg_spec_file = arg_in + ".json";
    const auto spec = hts::io::signal_spec_from_json(
        hts::io::load_json_argument(arg_spec_file));
    const auto frame = hts::io::read_frame(arg_in, spec);
    const auto g =
        hts::io::gate_spec_from_json(hts::io::load_json_argument(arg_gate));
    hts::io::write_frame(arg_out, hts::signal::apply_gate(frame, g, spec),
                         spec);
    json j;
    j["out"] = arg_out;
    j["samples"] = spec.samples();
    std::cout << j.dump(2) << "\n";
  });

  auto* cmd_sig_swap = cmd_signal->add_subcommand(
      "swap-demo", "Fidelity of f(x)g vs g(x)f through the signal domain. "
                   "Example: signal swap-demo --f f.json --g g.json");
  std::string arg_f, arg_g;
  cmd_sig_swap->add_option("--spec-file", arg_spec_file, "spec JSON");
  cmd_sig_swap->add_option("--qubits", arg_qubits, "qubit count if no spec");
  cmd_sig_swap->add_option("--f", arg_f, "left factor JSON")->required();
  cmd_sig_swap->add_option("--g", arg_g, "right factor JSON")->required();
  cmd_sig_swap->add_option("--out", arg_out, "output file (default stdout)");
  cmd_sig_swap->callback([&] {
    const auto spec = load_spec();
    const auto report = hts::signal::swap_fidelity(
        hts::io::state_from_json(hts::io::load_json_argument(arg_f)),
        hts::io::state_from_json(hts::io::load_json_argument(arg_g)), spec);
    json j;
    j["fidelity"] = report.fidelity;
    j["roundtrip_error"] = report.roundtrip_error;
    emit(j, arg_out);
  });

  // ---- verify-all ------------------------------------------------------------
  std::uint64_t arg_seed = 20240903;
  std::string arg_manifest = "manifest.json";
  auto* cmd_verify = app.add_subcommand(
      "verify-all", "Run the full acceptance sweep and write the manifest. "
                    "Example: verify-all --out manifest.json");
  cmd_verify->add_option("--seed", arg_seed,
                         "property-test seed (HIDDEN_TENSOR_SEED overrides)");
  cmd_verify->add_option("--out", arg_manifest, "manifest path");
  cmd_verify->callback([&] {
    const std::uint64_t seed = resolve_seed(arg_seed);
    const auto start = std::chrono::steady_clock::now();
    const auto results = hts::acceptance::run_all(seed);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    bool all_passed = true;
    json checks = json::array();
    for (const auto& r : results) {
      std::cout << hts::acceptance::format_line(r) << "\n";
      all_passed = all_passed && r.passed;
      json c;
      c["bound"] = r.bound;
      c["detail"] = r.detail;
      c["id"] = r.id;
      c["name"] = r.name;
      c["observed"] = r.observed;
      c["passed"] = r.passed;
      c["seconds"] = r.seconds;
      c["time_limit"] = r.time_limit;
      checks.push_back(c);
    }

    json manifest;
    manifest["all_passed"] = all_passed;
    manifest["checks"] = checks;
    manifest["command"] = command_line;
    manifest["library_version"] = hts::version;
    manifest["seed"] = seed;
    manifest["wall_seconds"] = wall;
    std::ofstream out(arg_manifest);
    if (!out)
      throw std::runtime_error("cannot open manifest path: " + arg_manifest);
    out << manifest.dump(2) << "\n";

    std::cout << (all_passed ? "all checks passed" : "CHECKS FAILED")
              << "; manifest written to " << arg_manifest << "\n";
    if (!all_passed) {
      for (const auto& r : results)
        if (!r.passed)
          throw std::runtime_error("acceptance check failed: " + r.name);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0, usage errors exit 2
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
