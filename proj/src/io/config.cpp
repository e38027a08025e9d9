// SPDX-License-Identifier: Apache-2.0
#include "rdmm/io/config.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rdmm/core/error.hpp"

namespace rdmm {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double x = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || p != v.data() + v.size()) throw DomainError("config: bad number for " + key + ": '" + v + "'");
  return x;
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  std::uint64_t x = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || p != v.data() + v.size()) throw DomainError("config: bad count for " + key + ": '" + v + "'");
  return x;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw DomainError("config: bad flag for " + key + ": '" + v + "'");
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> w;
  std::string tok;
  std::istringstream in(text);
  while (in >> tok) {
    std::size_t start = 0;
    while (start <= tok.size()) {
      const auto comma = tok.find(',', start);
      const std::string part = tok.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!part.empty()) w.push_back(to_double("custom weight", part));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return w;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

InitialStateSpec parse_state(const std::string& text) {
  if (text == "product") return InitialStateSpec::product();
  if (text == "linear") return InitialStateSpec::linear();
  if (text.rfind("two-schmidt:", 0) == 0) return InitialStateSpec::two_schmidt(to_double("state", text.substr(12)));
  if (text.rfind("custom:", 0) == 0) {
    const std::string arg = text.substr(7);
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
      std::ifstream in(arg);
      std::stringstream ss;
      ss << in.rdbuf();
      std::string body;
      for (std::string line; std::getline(ss, line);)
        if (const auto t = trim(line); !t.empty() && t[0] != '#') body += t + " ";
      return InitialStateSpec::custom(parse_list(body));
    }
    return InitialStateSpec::custom(parse_list(arg));
  }
  throw DomainError("unknown state '" + text + "' (product | two-schmidt:p | linear | custom:weights)");
}

std::string format_state(const InitialStateSpec& spec) {
  switch (spec.kind) {
    case StateKind::Product: return "product";
    case StateKind::LinearSchmidt: return "linear";
    case StateKind::TwoSchmidt: return "two-schmidt:" + format_double(spec.p);
    case StateKind::CustomSchmidt: {
      std::string s = "custom:";
      for (std::size_t i = 0; i < spec.weights.size(); ++i) s += (i ? "," : "") + format_double(spec.weights[i]);
      return s;
    }
  }
  return "product";
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::echo() const {
  return {
      {"command", command},
      {"n", std::to_string(n)},
      {"m", std::to_string(m)},
      {"state", format_state(parse_state(state))},
      {"tmin", format_double(tmin)},
      {"tmax", format_double(tmax)},
      {"tsteps", std::to_string(tsteps)},
      {"realizations", std::to_string(realizations)},
      {"seed", std::to_string(seed)},
      {"backend", backend},
      {"bins", std::to_string(bins)},
      {"bulk_only", bulk_only ? "true" : "false"},
      {"ensemble", ensemble},
      {"fixed_trace", fixed_trace ? "true" : "false"},
      {"accuracy", format_double(accuracy)},
  };
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  if (key == "command") command = value;
  else if (key == "n") n = to_u64(key, value);
  else if (key == "m") m = to_u64(key, value);
  else if (key == "state") state = value;
  else if (key == "tmin") tmin = to_double(key, value);
  else if (key == "tmax") tmax = to_double(key, value);
  else if (key == "tsteps") tsteps = to_u64(key, value);
  else if (key == "realizations") realizations = to_u64(key, value);
  else if (key == "seed") seed = to_u64(key, value);
  else if (key == "backend") backend = value;
  else if (key == "bins") bins = to_u64(key, value);
  else if (key == "bulk_only") bulk_only = to_bool(key, value);
  else if (key == "ensemble") ensemble = value;
  else if (key == "fixed_trace") fixed_trace = to_bool(key, value);
  else if (key == "accuracy") accuracy = to_double(key, value);
  else if (key == "workers") workers = static_cast<unsigned>(to_u64(key, value));
  else if (key == "out") out = value;
  else throw DomainError("config: unknown key '" + key + "'");
}

void ExperimentConfig::validate() const {
  if (n < 2) throw DomainError("config: n must be >= 2");
  if (m < n) throw DomainError("config: m must be >= n");
  if (tsteps < 1) throw DomainError("config: tsteps must be >= 1");
  if (realizations < 1) throw DomainError("config: realizations must be >= 1");
  if (workers < 1) throw DomainError("config: workers must be >= 1");
  if (ensemble != "nwe" && ensemble != "ncwe" && ensemble != "cwe")
    throw DomainError("config: ensemble must be nwe, ncwe or cwe");
  parse_backend(backend);
  schmidt_weights(parse_state(state), n);
}

void read_config(std::istream& in, ExperimentConfig& cfg) {
  for (std::string line; std::getline(in, line);) {
    std::string t = trim(line);
    if (!t.empty() && t[0] == '#') t = trim(t.substr(1));
    if (t.empty() || t.rfind("const ", 0) == 0) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) continue;
    cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
}

void read_config_file(const std::string& path, ExperimentConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw DomainError("config: cannot open '" + path + "'");
  read_config(in, cfg);
}

}  // namespace rdmm
