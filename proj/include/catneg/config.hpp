#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "catneg/channels.hpp"
#include "catneg/negativity.hpp"
#include "catneg/states.hpp"

namespace catneg {

enum class SweepMode { time_sweep, n_sweep, partition_sweep, compare };

std::string_view to_string(SweepMode m);
SweepMode parse_mode(std::string_view s);

struct SweepConfig {
  SweepMode mode = SweepMode::time_sweep;
  int n = 10;                 // N, or the first N of an n-sweep
  std::optional<int> n_max;   // last N of an n-sweep
  int k = 1;
  double theta0 = 1.0471975511965976;  // pi/3
  double s = 0.0;
  CatVariant variant = CatVariant::standard;
  ChannelKind channel = ChannelKind::dephasing;
  double gamma = 1.0;
  double t = 0.0;             // start time, or the fixed time of n/partition sweeps
  std::optional<double> t_max;
  int steps = 51;             // points including both endpoints
  QuadratureSpec quad;
  double eps = 1e-11;         // relative negative threshold
  std::string out;            // empty: stdout
  int max_qubits = kDefaultMaxQubits;
  int threads = 0;            // 0: hardware concurrency
};

/// Keys accepted in config files; identical to the long flag names.
const std::map<std::string, std::string_view>& config_keys();

using ConfigEntries = std::map<std::string, std::string>;

/// Parses `key = value` lines; '#' starts a comment. Unknown keys and
/// malformed lines throw ConfigError naming the offender.
ConfigEntries parse_config_text(std::string_view text, std::string_view origin = "config");
ConfigEntries load_config_file(const std::string& path);

/// Builds and validates a config. Throws ConfigError for unparsable values or
/// inconsistent combinations, CapacityError for N above max_qubits.
SweepConfig build_config(const ConfigEntries& entries);

void validate(const SweepConfig& cfg);

}  // namespace catneg
