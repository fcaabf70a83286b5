// Command-line driver: negativity sweeps of dephased cat states as CSV.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "catneg/config.hpp"
#include "catneg/error.hpp"
#include "catneg/sweep.hpp"

namespace {

enum ExitCode { kOk = 0, kConfig = 2, kCapacity = 3, kNumeric = 4 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement negativity of N-qubit cat states under per-qubit noise"};
  app.footer("Flags override values from --config. Angles are in radians.");

  std::optional<std::string> mode;
  std::optional<std::string> config_path;
  app.add_option("mode", mode, "time-sweep | n-sweep | partition-sweep | compare");
  app.add_option("--config", config_path, "key=value file, one pair per line, '#' comments");

  // One optional string per config key; set values override the file.
  std::map<std::string, std::optional<std::string>> flags;
  for (const auto& [key, help] : catneg::config_keys()) {
    if (key == "mode") continue;
    app.add_option("--" + key, flags[key], std::string(help));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    catneg::ConfigEntries entries;
    if (config_path) entries = catneg::load_config_file(*config_path);
    if (mode) entries["mode"] = *mode;
    for (const auto& [key, value] : flags) {
      if (value) entries[key] = *value;
    }
    if (!entries.contains("mode")) throw catneg::ConfigError("no mode given");
    const catneg::SweepConfig cfg = catneg::build_config(entries);

    std::ofstream file;
    if (!cfg.out.empty()) {
      file.open(cfg.out, std::ios::binary);
      if (!file) throw catneg::ConfigError("cannot open output file '" + cfg.out + "'");
    }
    std::ostream& out = cfg.out.empty() ? std::cout : file;
    const auto summary = catneg::run_sweep(cfg, out);
    out.flush();
    if (summary) (cfg.out.empty() ? std::cerr : std::cout) << summary->line() << '\n';
    return kOk;
  } catch (const catneg::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const catneg::InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const catneg::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
