#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "catneg/config.hpp"

namespace catneg {

/// Maximum relative error of each analytic column over rows where that
/// column carries no validity flag.
struct CompareSummary {
  std::optional<double> max_relerr_eq2;
  std::optional<double> max_relerr_gamma1;
  std::optional<double> max_relerr_small_angle;
  std::size_t rows = 0;

  std::string line() const;
};

/// Evenly spaced times from cfg.t to cfg.t_max, both included.
std::vector<double> time_grid(const SweepConfig& cfg);

void run_time_sweep(const SweepConfig& cfg, std::ostream& csv);
void run_n_sweep(const SweepConfig& cfg, std::ostream& csv);
void run_partition_sweep(const SweepConfig& cfg, std::ostream& csv);
CompareSummary run_compare(const SweepConfig& cfg, std::ostream& csv);

/// Dispatches on cfg.mode; the summary is set for compare only.
std::optional<CompareSummary> run_sweep(const SweepConfig& cfg, std::ostream& csv);

}  // namespace catneg
