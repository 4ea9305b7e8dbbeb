#include "ocqst/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ocqst/states.hpp"

namespace ocqst {

namespace {

using nlohmann::json;

std::string format_sig17(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string escape_json(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw io_error(path + ": cannot open for writing");
  out << text;
  if (!out) throw io_error(path + ": write failed");
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error(path + ": cannot open for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw io_error(path + ": " + e.what());
  }
}

// Strict field access helpers: wrong or missing fields surface as
// validation errors naming the file and key.
const json& require_key(const json& j, const std::string& key,
                        const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw validation_error(path + ": missing key \"" + key + "\"");
  }
  return *it;
}

double as_double(const json& j, const std::string& key,
                 const std::string& path) {
  const json& v = require_key(j, key, path);
  if (!v.is_number()) {
    throw validation_error(path + ": \"" + key + "\" must be a number");
  }
  return v.get<double>();
}

std::int64_t as_int(const json& j, const std::string& key,
                    const std::string& path) {
  const json& v = require_key(j, key, path);
  if (!v.is_number_integer()) {
    throw validation_error(path + ": \"" + key + "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

std::string as_string(const json& j, const std::string& key,
                      const std::string& path) {
  const json& v = require_key(j, key, path);
  if (!v.is_string()) {
    throw validation_error(path + ": \"" + key + "\" must be a string");
  }
  return v.get<std::string>();
}

}  // namespace

void write_density(const DensityMatrix& rho, const std::string& path) {
  std::ostringstream out;
  out << "{\n  \"n_qubits\": " << rho.n_qubits() << ",\n  \"entries\": [";
  const auto& entries = rho.matrix().entries();
  for (size_t k = 0; k < entries.size(); ++k) {
    out << (k == 0 ? "" : ",") << "\n    [" << format_sig17(entries[k].real())
        << ", " << format_sig17(entries[k].imag()) << "]";
  }
  out << "\n  ]\n}\n";
  write_text_file(path, out.str());
}

DensityMatrix read_density(const std::string& path) {
  const json j = load_json(path);
  const int n_qubits = static_cast<int>(as_int(j, "n_qubits", path));
  if (n_qubits < 1 || n_qubits > 16) {
    throw validation_error(path + ": n_qubits out of range");
  }
  const int dim = 1 << n_qubits;

  const json& entries = require_key(j, "entries", path);
  if (!entries.is_array() ||
      entries.size() != static_cast<size_t>(dim) * dim) {
    std::ostringstream msg;
    msg << path << ": entries must be an array of " << dim * dim
        << " [re, im] pairs";
    throw validation_error(msg.str());
  }

  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k) {
      const json& pair = entries[static_cast<size_t>(i) * dim + k];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
          !pair[1].is_number()) {
        throw validation_error(path + ": each entry must be a [re, im] pair");
      }
      m(i, k) = cplx(pair[0].get<double>(), pair[1].get<double>());
    }
  }
  return validate_density(m, 1e-9);
}

namespace {

std::string basis_set_to_json(const BasisSet& set, int indent) {
  const std::string pad(indent, ' ');
  std::ostringstream out;
  out << "{\n"
      << pad << "  \"scheme\": \"" << scheme_name(set.scheme) << "\",\n"
      << pad << "  \"n_qubits\": " << set.n_qubits << ",\n"
      << pad << "  \"m\": " << set.size() << ",\n"
      << pad << "  \"labels\": [";
  for (int i = 0; i < set.size(); ++i) {
    out << (i == 0 ? "" : ", ") << '"' << escape_json(set.labels[i]) << '"';
  }
  out << "]\n" << pad << "}";
  return out.str();
}

BasisScheme scheme_from_name(const std::string& name, const std::string& path) {
  if (name == "standard") return BasisScheme::standard;
  if (name == "overcomplete") return BasisScheme::overcomplete;
  if (name == "table1_prefix") return BasisScheme::table1_prefix;
  throw validation_error(path + ": unknown scheme \"" + name + "\"");
}

BasisSet basis_set_from_json(const json& j, const std::string& path) {
  BasisSet set;
  set.scheme = scheme_from_name(as_string(j, "scheme", path), path);
  set.n_qubits = static_cast<int>(as_int(j, "n_qubits", path));
  if (set.n_qubits < 1 || set.n_qubits > 16) {
    throw validation_error(path + ": n_qubits out of range");
  }

  const json& labels = require_key(j, "labels", path);
  if (!labels.is_array() || labels.empty()) {
    throw validation_error(path + ": labels must be a non-empty array");
  }
  const auto m = as_int(j, "m", path);
  if (m != static_cast<std::int64_t>(labels.size())) {
    throw validation_error(path + ": m does not match the label count");
  }
  for (const auto& label : labels) {
    if (!label.is_string()) {
      throw validation_error(path + ": labels must be strings");
    }
    const std::string text = label.get<std::string>();
    set.labels.push_back(text);
    set.bases.push_back(named_pure(text, set.n_qubits));
  }
  return set;
}

}  // namespace

void write_count_record(const CountRecord& record, const std::string& path) {
  std::ostringstream out;
  out << "{\n  \"basis_set\": " << basis_set_to_json(record.basis_set, 2)
      << ",\n  \"shots\": [";
  for (size_t i = 0; i < record.shots.size(); ++i) {
    out << (i == 0 ? "" : ", ") << record.shots[i];
  }
  out << "],\n  \"counts\": [";
  for (size_t i = 0; i < record.counts.size(); ++i) {
    out << (i == 0 ? "" : ", ") << record.counts[i];
  }
  out << "],\n  \"total_N\": " << record.total_n << "\n}\n";
  write_text_file(path, out.str());
}

CountRecord read_count_record(const std::string& path) {
  const json j = load_json(path);
  CountRecord record;
  record.basis_set = basis_set_from_json(require_key(j, "basis_set", path), path);
  record.total_n = as_int(j, "total_N", path);

  const json& shots = require_key(j, "shots", path);
  const json& counts = require_key(j, "counts", path);
  const auto m = static_cast<size_t>(record.basis_set.size());
  if (!shots.is_array() || shots.size() != m || !counts.is_array() ||
      counts.size() != m) {
    throw validation_error(path +
                           ": shots and counts must match the basis count");
  }

  std::int64_t shot_sum = 0;
  for (size_t v = 0; v < m; ++v) {
    if (!shots[v].is_number_integer() || !counts[v].is_number_integer()) {
      throw validation_error(path + ": shots and counts must be integers");
    }
    const auto s = shots[v].get<std::int64_t>();
    const auto c = counts[v].get<std::int64_t>();
    if (s < 0 || c < 0) {
      std::ostringstream msg;
      msg << path << ": basis " << v << " has negative shots (" << s
          << ") or counts (" << c << ")";
      throw validation_error(msg.str());
    }
    record.shots.push_back(s);
    record.counts.push_back(c);
    shot_sum += s;
  }
  if (shot_sum != record.total_n) {
    std::ostringstream msg;
    msg << path << ": shots sum to " << shot_sum << " but total_N is "
        << record.total_n;
    throw validation_error(msg.str());
  }
  return record;
}

namespace {

std::string anneal_config_to_json(const AnnealConfig& c, int indent) {
  const std::string pad(indent, ' ');
  std::ostringstream out;
  out << "{\n"
      << pad << "  \"initial_temperature\": " << format_sig17(c.initial_temperature) << ",\n"
      << pad << "  \"cooling_factor\": " << format_sig17(c.cooling_factor) << ",\n"
      << pad << "  \"sweeps_per_temperature\": " << c.sweeps_per_temperature << ",\n"
      << pad << "  \"proposal_scale\": " << format_sig17(c.proposal_scale) << ",\n"
      << pad << "  \"boltzmann_k\": " << format_sig17(c.boltzmann_k) << ",\n"
      << pad << "  \"stall_window\": " << c.stall_window << ",\n"
      << pad << "  \"stall_tolerance\": " << format_sig17(c.stall_tolerance) << ",\n"
      << pad << "  \"max_temperature_steps\": " << c.max_temperature_steps << ",\n"
      << pad << "  \"likelihood_epsilon\": " << format_sig17(c.likelihood_epsilon) << "\n"
      << pad << "}";
  return out.str();
}

AnnealConfig anneal_config_from_json(const json& j, const std::string& path) {
  AnnealConfig c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "initial_temperature") c.initial_temperature = as_double(j, key, path);
    else if (key == "cooling_factor") c.cooling_factor = as_double(j, key, path);
    else if (key == "sweeps_per_temperature") c.sweeps_per_temperature = static_cast<int>(as_int(j, key, path));
    else if (key == "proposal_scale") c.proposal_scale = as_double(j, key, path);
    else if (key == "boltzmann_k") c.boltzmann_k = as_double(j, key, path);
    else if (key == "stall_window") c.stall_window = static_cast<int>(as_int(j, key, path));
    else if (key == "stall_tolerance") c.stall_tolerance = as_double(j, key, path);
    else if (key == "max_temperature_steps") c.max_temperature_steps = static_cast<int>(as_int(j, key, path));
    else if (key == "likelihood_epsilon") c.likelihood_epsilon = as_double(j, key, path);
    else throw config_error(path + ": unknown anneal key \"" + key + "\"");
  }
  c.validate();
  return c;
}

}  // namespace

void write_anneal_config(const AnnealConfig& config, const std::string& path) {
  write_text_file(path, anneal_config_to_json(config, 0) + "\n");
}

AnnealConfig read_anneal_config(const std::string& path) {
  const json j = load_json(path);
  if (!j.is_object()) throw config_error(path + ": expected a JSON object");
  return anneal_config_from_json(j, path);
}

void write_estimate_report(const EstimateReport& report,
                           const AnnealConfig& config, std::uint64_t seed,
                           const std::string& path) {
  std::ostringstream out;
  out << "{\n"
      << "  \"final_neg_log_likelihood\": "
      << format_sig17(report.final_neg_log_likelihood) << ",\n"
      << "  \"temperature_steps_used\": " << report.temperature_steps_used
      << ",\n"
      << "  \"accepted_moves\": " << report.accepted_moves << ",\n"
      << "  \"proposed_moves\": " << report.proposed_moves << ",\n"
      << "  \"seed\": " << seed << ",\n"
      << "  \"anneal\": " << anneal_config_to_json(config, 2) << "\n"
      << "}\n";
  write_text_file(path, out.str());
}

namespace {

std::string state_kind_name(StateKind kind) {
  switch (kind) {
    case StateKind::bell_diagonal: return "bell_diagonal";
    case StateKind::werner: return "werner";
    case StateKind::pure_named: return "pure_named";
    case StateKind::random: return "random";
  }
  return "?";
}

StateKind state_kind_from_name(const std::string& name,
                               const std::string& path) {
  if (name == "bell_diagonal") return StateKind::bell_diagonal;
  if (name == "werner") return StateKind::werner;
  if (name == "pure_named") return StateKind::pure_named;
  if (name == "random") return StateKind::random;
  throw config_error(path + ": unknown state kind \"" + name + "\"");
}

std::string state_spec_to_json(const StateSpec& s, int indent) {
  const std::string pad(indent, ' ');
  std::ostringstream out;
  out << "{\n"
      << pad << "  \"kind\": \"" << state_kind_name(s.kind) << "\",\n"
      << pad << "  \"parameter\": " << format_sig17(s.parameter) << ",\n"
      << pad << "  \"label\": \"" << escape_json(s.label) << "\",\n"
      << pad << "  \"n_qubits\": " << s.n_qubits << ",\n"
      << pad << "  \"pure\": " << (s.pure ? "true" : "false") << "\n"
      << pad << "}";
  return out.str();
}

StateSpec state_spec_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw config_error(path + ": state must be an object");
  StateSpec s;
  s.kind = state_kind_from_name(as_string(j, "kind", path), path);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "kind") continue;
    else if (key == "parameter") s.parameter = as_double(j, key, path);
    else if (key == "label") s.label = as_string(j, key, path);
    else if (key == "n_qubits") s.n_qubits = static_cast<int>(as_int(j, key, path));
    else if (key == "pure") {
      if (!it->is_boolean()) throw config_error(path + ": \"pure\" must be a boolean");
      s.pure = it->get<bool>();
    } else {
      throw config_error(path + ": unknown state key \"" + key + "\"");
    }
  }
  switch (s.kind) {
    case StateKind::bell_diagonal:
    case StateKind::werner:
      s.n_qubits = 2;
      break;
    case StateKind::pure_named:
      if (s.label == "psi_minus" || s.label == "phi_minus") {
        s.n_qubits = 2;
      } else if (!s.label.empty()) {
        s.n_qubits = static_cast<int>(s.label.size());
      } else {
        throw config_error(path + ": pure_named state needs a label");
      }
      break;
    case StateKind::random:
      break;
  }
  return s;
}

}  // namespace

SchemeSpec parse_scheme_string(const std::string& text) {
  SchemeSpec spec;
  if (text == "standard") {
    spec.scheme = BasisScheme::standard;
    return spec;
  }
  if (text == "overcomplete") {
    spec.scheme = BasisScheme::overcomplete;
    return spec;
  }
  if (text.rfind("standard:", 0) == 0) {
    spec.scheme = BasisScheme::standard;
    spec.standard_letters = text.substr(9);
    if (spec.standard_letters.empty()) {
      throw config_error("scheme \"" + text + "\": empty letter set");
    }
    return spec;
  }
  if (text.rfind("table1:", 0) == 0) {
    spec.scheme = BasisScheme::table1_prefix;
    try {
      spec.table1_m = std::stoi(text.substr(7));
    } catch (const std::exception&) {
      throw config_error("scheme \"" + text + "\": bad prefix size");
    }
    if (spec.table1_m < 1 || spec.table1_m > 36) {
      throw config_error("scheme \"" + text + "\": prefix size outside [1, 36]");
    }
    return spec;
  }
  throw config_error("unknown scheme \"" + text +
                     "\" (expected standard, standard:<letters>, overcomplete, "
                     "or table1:<m>)");
}

StateSpec parse_state_spec_string(const std::string& text, int n_qubits) {
  StateSpec spec;
  spec.n_qubits = n_qubits;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail =
      colon == std::string::npos ? std::string() : text.substr(colon + 1);

  auto parse_param = [&](const char* what) {
    try {
      return std::stod(tail);
    } catch (const std::exception&) {
      throw config_error(std::string("state \"") + text + "\": " + what +
                         " needs a numeric parameter");
    }
  };

  if (head == "random") {
    spec.kind = StateKind::random;
    if (tail == "pure") spec.pure = true;
    else if (!tail.empty()) throw config_error("state \"" + text + "\": unknown random variant");
  } else if (head == "werner") {
    spec.kind = StateKind::werner;
    spec.parameter = parse_param("werner");
    spec.n_qubits = 2;
  } else if (head == "bell_diagonal") {
    spec.kind = StateKind::bell_diagonal;
    spec.parameter = parse_param("bell_diagonal");
    spec.n_qubits = 2;
  } else if (head == "pure") {
    spec.kind = StateKind::pure_named;
    spec.label = tail;
    if (tail == "psi_minus" || tail == "phi_minus") {
      spec.n_qubits = 2;
    } else if (!tail.empty()) {
      spec.n_qubits = static_cast<int>(tail.size());
    } else {
      throw config_error("state \"" + text + "\": pure needs a label");
    }
  } else {
    throw config_error("unknown state \"" + text +
                       "\" (expected random, random:pure, werner:<q>, "
                       "bell_diagonal:<b>, or pure:<label>)");
  }
  return spec;
}

std::string sweep_config_to_json(const SweepConfig& config) {
  std::ostringstream out;
  out << "{\n"
      << "    \"experiment\": \"" << experiment_name(config.experiment)
      << "\",\n"
      << "    \"state\": " << state_spec_to_json(config.state, 4) << ",\n"
      << "    \"schemes\": [";
  for (size_t i = 0; i < config.schemes.size(); ++i) {
    const auto& s = config.schemes[i];
    out << (i == 0 ? "" : ", ") << '"';
    if (s.scheme == BasisScheme::standard && s.standard_letters != "01+L") {
      out << "standard:" << escape_json(s.standard_letters);
    } else {
      out << s.tag();
    }
    out << '"';
  }
  out << "],\n    \"n_grid\": [";
  for (size_t i = 0; i < config.n_grid.size(); ++i) {
    out << (i == 0 ? "" : ", ") << config.n_grid[i];
  }
  out << "],\n    \"m_grid\": [";
  for (size_t i = 0; i < config.m_grid.size(); ++i) {
    out << (i == 0 ? "" : ", ") << config.m_grid[i];
  }
  out << "],\n"
      << "    \"trials\": " << config.trials << ",\n"
      << "    \"master_seed\": " << config.master_seed << ",\n"
      << "    \"anneal\": " << anneal_config_to_json(config.anneal, 4) << ",\n"
      << "    \"output_path\": \"" << escape_json(config.output_path) << "\",\n"
      << "    \"workers\": " << config.workers << "\n"
      << "  }";
  return out.str();
}

SweepConfig read_sweep_config(const std::string& path) {
  json j;
  try {
    j = load_json(path);
  } catch (const io_error& e) {
    // A config file that exists but does not parse is a config problem.
    std::ifstream probe(path);
    if (probe) throw config_error(e.what());
    throw;
  }
  if (!j.is_object()) throw config_error(path + ": expected a JSON object");

  SweepConfig config;
  bool have_experiment = false;

  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "experiment") {
      const std::string name = as_string(j, key, path);
      if (name == "error_sweep") config.experiment = Experiment::error_sweep;
      else if (name == "concurrence_sweep") config.experiment = Experiment::concurrence_sweep;
      else if (name == "basis_count_sweep") config.experiment = Experiment::basis_count_sweep;
      else throw config_error(path + ": unknown experiment \"" + name + "\"");
      have_experiment = true;
    } else if (key == "state") {
      config.state = state_spec_from_json(*it, path);
    } else if (key == "schemes") {
      if (!it->is_array()) throw config_error(path + ": schemes must be an array");
      for (const auto& s : *it) {
        if (!s.is_string()) throw config_error(path + ": schemes must be strings");
        config.schemes.push_back(parse_scheme_string(s.get<std::string>()));
      }
    } else if (key == "n_grid") {
      if (!it->is_array()) throw config_error(path + ": n_grid must be an array");
      for (const auto& n : *it) {
        if (!n.is_number_integer()) throw config_error(path + ": n_grid entries must be integers");
        config.n_grid.push_back(n.get<std::int64_t>());
      }
    } else if (key == "m_grid") {
      if (!it->is_array()) throw config_error(path + ": m_grid must be an array");
      for (const auto& m : *it) {
        if (!m.is_number_integer()) throw config_error(path + ": m_grid entries must be integers");
        config.m_grid.push_back(static_cast<int>(m.get<std::int64_t>()));
      }
    } else if (key == "trials") {
      config.trials = static_cast<int>(as_int(j, key, path));
    } else if (key == "master_seed") {
      if (!(*it).is_number_unsigned() && !(*it).is_number_integer()) {
        throw config_error(path + ": master_seed must be an integer");
      }
      config.master_seed = it->get<std::uint64_t>();
    } else if (key == "anneal") {
      if (!it->is_object()) throw config_error(path + ": anneal must be an object");
      config.anneal = anneal_config_from_json(*it, path);
    } else if (key == "output_path") {
      config.output_path = as_string(j, key, path);
    } else if (key == "workers") {
      config.workers = static_cast<int>(as_int(j, key, path));
    } else {
      throw config_error(path + ": unknown key \"" + key + "\"");
    }
  }

  if (!have_experiment) throw config_error(path + ": missing \"experiment\"");
  try {
    config.validate();
  } catch (const validation_error& e) {
    throw config_error(path + ": " + e.what());
  }
  return config;
}

}  // namespace ocqst
