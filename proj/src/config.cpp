#include "catneg/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "catneg/error.hpp"

namespace catneg {

std::string_view to_string(SweepMode m) {
  switch (m) {
    case SweepMode::time_sweep: return "time-sweep";
    case SweepMode::n_sweep: return "n-sweep";
    case SweepMode::partition_sweep: return "partition-sweep";
    case SweepMode::compare: return "compare";
  }
  return "?";
}

SweepMode parse_mode(std::string_view s) {
  for (auto m : {SweepMode::time_sweep, SweepMode::n_sweep, SweepMode::partition_sweep,
                 SweepMode::compare}) {
    if (s == to_string(m)) return m;
  }
  throw ConfigError("unknown mode '" + std::string(s) +
                    "' (expected time-sweep, n-sweep, partition-sweep or compare)");
}

const std::map<std::string, std::string_view>& config_keys() {
  static const std::map<std::string, std::string_view> keys = {
      {"mode", "time-sweep | n-sweep | partition-sweep | compare"},
      {"n", "number of qubits N (first N of an n-sweep)"},
      {"n-max", "last N of an n-sweep"},
      {"k", "size of the transposed subsystem"},
      {"theta0", "state angle in radians, [0, pi/2]"},
      {"s", "Gaussian width of f(theta), 0 for the delta form"},
      {"gamma", "decoherence rate"},
      {"t", "time (start of a time sweep)"},
      {"t-max", "end of a time sweep"},
      {"steps", "points in a time sweep, endpoints included"},
      {"channel", "dephasing | depolarizing"},
      {"variant", "standard | zbasis | zerotilted"},
      {"quad-nodes", "Gauss-Legendre nodes for s > 0 (odd)"},
      {"quad-halfwidth", "quadrature support half-width in units of s"},
      {"eps", "relative threshold for negative eigenvalues"},
      {"out", "output CSV path (default stdout)"},
      {"max-qubits", "capacity cap on N"},
      {"threads", "worker threads, 0 = hardware concurrency"},
  };
  return keys;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_value(const ConfigEntries& e, const std::string& key, T fallback) {
  const auto it = e.find(key);
  if (it == e.end()) return fallback;
  const std::string& text = it->second;
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("invalid value '" + text + "' for key '" + key + "'");
  }
  return value;
}

template <typename T>
std::optional<T> parse_optional(const ConfigEntries& e, const std::string& key) {
  if (!e.contains(key)) return std::nullopt;
  return parse_value<T>(e, key, T{});
}

template <typename F>
auto parse_enum(const ConfigEntries& e, const std::string& key, F parse,
                decltype(parse(std::string_view{})) fallback) {
  const auto it = e.find(key);
  if (it == e.end()) return fallback;
  try {
    return parse(it->second);
  } catch (const InvalidArgument& err) {
    throw ConfigError("key '" + key + "': " + err.what());
  }
}

}  // namespace

ConfigEntries parse_config_text(std::string_view text, std::string_view origin) {
  ConfigEntries out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(origin) + ":" + std::to_string(line_no) +
                        ": expected key=value, got '" + std::string(line) + "'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!config_keys().contains(key)) {
      throw ConfigError(std::string(origin) + ":" + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    }
    out[key] = value;
  }
  return out;
}

ConfigEntries load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

SweepConfig build_config(const ConfigEntries& e) {
  for (const auto& [key, value] : e) {
    if (!config_keys().contains(key)) throw ConfigError("unknown key '" + key + "'");
  }
  SweepConfig c;
  c.mode = parse_enum(e, "mode", parse_mode, c.mode);
  c.n = parse_value(e, "n", c.n);
  c.n_max = parse_optional<int>(e, "n-max");
  c.k = parse_value(e, "k", c.k);
  c.theta0 = parse_value(e, "theta0", c.theta0);
  c.s = parse_value(e, "s", c.s);
  c.variant = parse_enum(e, "variant", parse_variant, c.variant);
  c.channel = parse_enum(e, "channel", parse_channel, c.channel);
  c.gamma = parse_value(e, "gamma", c.gamma);
  c.t = parse_value(e, "t", c.t);
  c.t_max = parse_optional<double>(e, "t-max");
  c.steps = parse_value(e, "steps", c.steps);
  c.quad.node_count = parse_value(e, "quad-nodes", c.quad.node_count);
  c.quad.support_halfwidth = parse_value(e, "quad-halfwidth", c.quad.support_halfwidth);
  c.eps = parse_value(e, "eps", c.eps);
  if (const auto it = e.find("out"); it != e.end()) c.out = it->second;
  c.max_qubits = parse_value(e, "max-qubits", c.max_qubits);
  c.threads = parse_value(e, "threads", c.threads);
  validate(c);
  return c;
}

void validate(const SweepConfig& c) {
  auto fail = [](const std::string& key, const std::string& why) {
    throw ConfigError("key '" + key + "': " + why);
  };
  if (c.max_qubits < 2) fail("max-qubits", "must be >= 2");
  const int last_n = c.mode == SweepMode::n_sweep ? c.n_max.value_or(c.n) : c.n;
  if (c.mode == SweepMode::n_sweep) {
    if (!c.n_max) fail("n-max", "required for an n-sweep");
    if (*c.n_max < c.n) fail("n-max", "must be >= n");
  }
  if (c.n < 2) fail("n", "must be >= 2");
  if (last_n > c.max_qubits) {
    throw CapacityError("N = " + std::to_string(last_n) + " exceeds the capacity cap of " +
                        std::to_string(c.max_qubits) + " qubits");
  }
  if (c.mode != SweepMode::partition_sweep && (c.k < 1 || c.k > c.n - 1)) {
    fail("k", "must lie in [1, N-1]");
  }
  if (c.mode == SweepMode::time_sweep || c.mode == SweepMode::compare) {
    if (!c.t_max) fail("t-max", "required for a time sweep");
    if (*c.t_max < c.t) fail("t-max", "must be >= t");
    if (c.steps < 2) fail("steps", "must be >= 2");
  }
  if (!(c.gamma >= 0.0)) fail("gamma", "must be >= 0");
  if (!(c.t >= 0.0)) fail("t", "must be >= 0");
  if (!(c.eps > 0.0)) fail("eps", "must be > 0");
  if (c.threads < 0) fail("threads", "must be >= 0");
  try {
    validate(CatStateSpec{2, c.theta0, c.s, c.variant});
    if (c.s > 0.0) validate(c.quad);
  } catch (const CapacityError&) {
    throw;
  } catch (const InvalidArgument& err) {
    throw ConfigError(err.what());
  }
}

}  // namespace catneg
