#include "catneg/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <ostream>
#include <string_view>
#include <thread>

#include "catneg/analytic.hpp"
#include "catneg/csv.hpp"
#include "catneg/error.hpp"

namespace catneg {

namespace {

using Cells = std::vector<std::string>;

// Evaluates fn(0..count-1) on a small worker pool. Results land in index
// order; the first exception (by index) is rethrown.
template <typename T>
std::vector<T> parallel_map(std::size_t count, int threads, const std::function<T(std::size_t)>& fn) {
  std::vector<T> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned n = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
  n = std::clamp<unsigned>(n, 1u, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

struct AnalyticCell {
  std::optional<double> value;
  analytic::Flags flags;
};

struct Row {
  Cells coords;
  double numeric = 0.0;
  std::vector<std::optional<double>> extra;  // numeric companions (delta column)
  std::vector<AnalyticCell> analytic;
  std::size_t n_negative = 0;
  DegeneracyGroups groups;
};

NegativityReport numeric_point(const SweepConfig& cfg, int n, int k, double gamma_t, double s) {
  const CatStateSpec spec{n, cfg.theta0, s, cfg.variant};
  const ChannelSpec channel{cfg.channel, gamma_t};
  const std::optional<QuadratureSpec> quad =
      s > 0.0 ? std::optional<QuadratureSpec>(cfg.quad) : std::nullopt;
  const ComplexMatrix rho = evolve_cat(spec, channel, quad, cfg.max_qubits);
  NegativityOptions opts;
  opts.eps_rel = cfg.eps;
  return negativity(rho, PartitionSpec::first_k(n, k), opts);
}

bool closed_forms_apply(const SweepConfig& cfg) {
  return cfg.variant == CatVariant::standard && cfg.channel == ChannelKind::dephasing &&
         cfg.s == 0.0;
}

// Wraps a closed-form evaluation; domain errors become an empty cell plus a flag.
AnalyticCell evaluate(std::string_view column, const std::function<AnalyticCell()>& fn) {
  try {
    return fn();
  } catch (const Error&) {
    return {std::nullopt, {column}};
  }
}

AnalyticCell eq2_cell(const SweepConfig& cfg, int n, int k, double gamma_t) {
  if (!closed_forms_apply(cfg) || std::min(k, n - k) != 1 || n < 4) return {};
  return evaluate("eq2_undefined", [&] {
    const auto r = analytic::short_time_negativity_k1(n, cfg.theta0, gamma_t);
    return AnalyticCell{std::isfinite(r.value) ? std::optional(r.value) : std::nullopt, r.flags};
  });
}

AnalyticCell gamma1_cell(const SweepConfig& cfg, int n, int k, double gamma_t) {
  if (!closed_forms_apply(cfg)) return {};
  return evaluate("gamma1_undefined", [&] {
    const auto r = analytic::general_partition_gamma1(n, std::min(k, n - k), cfg.theta0, gamma_t);
    return AnalyticCell{-r.gamma1, r.flags};
  });
}

AnalyticCell small_angle_cell(const SweepConfig& cfg, int n, int k, double gamma_t) {
  if (!closed_forms_apply(cfg)) return {};
  return evaluate("small_angle_undefined", [&] {
    const auto r = analytic::small_angle_negativity(n, std::min(k, n - k), cfg.theta0, gamma_t);
    return AnalyticCell{r.value, r.flags};
  });
}

std::optional<double> relative_error(const AnalyticCell& a, double numeric) {
  if (!a.value || numeric == 0.0) return std::nullopt;
  return std::abs(*a.value - numeric) / numeric;
}

std::string encode_flags(const std::vector<AnalyticCell>& cells) {
  std::vector<std::string_view> seen;
  for (const auto& c : cells) {
    for (auto f : c.flags) {
      if (std::find(seen.begin(), seen.end(), f) == seen.end()) seen.push_back(f);
    }
  }
  std::string out;
  for (auto f : seen) {
    if (!out.empty()) out += ';';
    out += f;
  }
  return out;
}

void fill_numeric(Row& row, const NegativityReport& rep) {
  row.numeric = rep.value;
  row.n_negative = rep.negative_eigenvalues.size();
  row.groups = rep.groups;
}

void emit(std::ostream& os, const Cells& header, const std::vector<Row>& rows,
          bool with_relerr) {
  os << csv::join(header) << '\n';
  for (const auto& row : rows) {
    Cells cells = row.coords;
    cells.push_back(csv::format_number(row.numeric));
    for (const auto& e : row.extra) cells.push_back(csv::format_optional(e));
    for (const auto& a : row.analytic) cells.push_back(csv::format_optional(a.value));
    if (with_relerr) {
      for (const auto& a : row.analytic) {
        cells.push_back(csv::format_optional(relative_error(a, row.numeric)));
      }
    }
    cells.push_back(std::to_string(row.n_negative));
    cells.push_back(csv::encode_groups(row.groups));
    cells.push_back(encode_flags(row.analytic));
    os << csv::join(cells) << '\n';
  }
}

std::vector<Row> time_rows(const SweepConfig& cfg, bool all_closed_forms) {
  const std::vector<double> times = time_grid(cfg);
  return parallel_map<Row>(times.size(), cfg.threads, [&](std::size_t i) {
    const double t = times[i];
    const double gamma_t = cfg.gamma * t;
    Row row;
    row.coords = {csv::format_number(t), csv::format_number(gamma_t)};
    fill_numeric(row, numeric_point(cfg, cfg.n, cfg.k, gamma_t, cfg.s));
    row.analytic.push_back(eq2_cell(cfg, cfg.n, cfg.k, gamma_t));
    if (all_closed_forms) {
      row.analytic.push_back(gamma1_cell(cfg, cfg.n, cfg.k, gamma_t));
      row.analytic.push_back(small_angle_cell(cfg, cfg.n, cfg.k, gamma_t));
    }
    return row;
  });
}

}  // namespace

std::string CompareSummary::line() const {
  return "# summary rows=" + std::to_string(rows) +
         " max_relerr_eq2=" + csv::format_optional(max_relerr_eq2) +
         " max_relerr_gamma1=" + csv::format_optional(max_relerr_gamma1) +
         " max_relerr_small_angle=" + csv::format_optional(max_relerr_small_angle);
}

std::vector<double> time_grid(const SweepConfig& cfg) {
  if (!cfg.t_max || cfg.steps < 2) throw ConfigError("a time sweep needs t-max and steps >= 2");
  std::vector<double> times(static_cast<std::size_t>(cfg.steps));
  const double span = *cfg.t_max - cfg.t;
  for (int i = 0; i < cfg.steps; ++i) {
    times[static_cast<std::size_t>(i)] = cfg.t + span * i / (cfg.steps - 1);
  }
  times.back() = *cfg.t_max;
  return times;
}

void run_time_sweep(const SweepConfig& cfg, std::ostream& csv) {
  validate(cfg);
  emit(csv, {"t", "gamma_t", "negativity_numeric", "negativity_eq2", "n_negative", "groups", "flags"},
       time_rows(cfg, false), false);
}

void run_n_sweep(const SweepConfig& cfg, std::ostream& csv) {
  validate(cfg);
  const int first = cfg.n;
  const int last = cfg.n_max.value_or(cfg.n);
  if (cfg.k > first - 1) throw ConfigError("key 'k': must be < N for every N of the sweep");
  const double gamma_t = cfg.gamma * cfg.t;
  const bool gaussian = cfg.s > 0.0;
  const auto rows = parallel_map<Row>(static_cast<std::size_t>(last - first + 1), cfg.threads,
                                      [&](std::size_t i) {
    const int n = first + static_cast<int>(i);
    Row row;
    row.coords = {std::to_string(n)};
    fill_numeric(row, numeric_point(cfg, n, cfg.k, gamma_t, cfg.s));
    if (gaussian) row.extra.push_back(numeric_point(cfg, n, cfg.k, gamma_t, 0.0).value);
    row.analytic.push_back(eq2_cell(cfg, n, cfg.k, gamma_t));
    row.analytic.push_back(small_angle_cell(cfg, n, cfg.k, gamma_t));
    return row;
  });
  Cells header{"n", "negativity_numeric"};
  if (gaussian) header.push_back("negativity_delta");
  for (const char* c : {"negativity_eq2", "negativity_small_angle", "n_negative", "groups", "flags"}) {
    header.push_back(c);
  }
  emit(csv, header, rows, false);
}

void run_partition_sweep(const SweepConfig& cfg, std::ostream& csv) {
  validate(cfg);
  const double gamma_t = cfg.gamma * cfg.t;
  const auto rows = parallel_map<Row>(static_cast<std::size_t>(cfg.n / 2), cfg.threads,
                                      [&](std::size_t i) {
    const int k = static_cast<int>(i) + 1;
    Row row;
    row.coords = {std::to_string(k)};
    fill_numeric(row, numeric_point(cfg, cfg.n, k, gamma_t, cfg.s));
    row.analytic.push_back(gamma1_cell(cfg, cfg.n, k, gamma_t));
    row.analytic.push_back(small_angle_cell(cfg, cfg.n, k, gamma_t));
    return row;
  });
  emit(csv, {"k", "negativity_numeric", "negativity_gamma1", "negativity_small_angle",
             "n_negative", "groups", "flags"},
       rows, false);
}

CompareSummary run_compare(const SweepConfig& cfg, std::ostream& csv) {
  validate(cfg);
  const auto rows = time_rows(cfg, true);
  emit(csv, {"t", "gamma_t", "negativity_numeric", "negativity_eq2", "negativity_gamma1",
             "negativity_small_angle", "relerr_eq2", "relerr_gamma1", "relerr_small_angle",
             "n_negative", "groups", "flags"},
       rows, true);

  CompareSummary summary;
  summary.rows = rows.size();
  std::optional<double>* slots[] = {&summary.max_relerr_eq2, &summary.max_relerr_gamma1,
                                    &summary.max_relerr_small_angle};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.analytic.size(); ++c) {
      const auto& cell = row.analytic[c];
      if (!cell.flags.empty()) continue;
      const auto err = relative_error(cell, row.numeric);
      if (err) *slots[c] = std::max(slots[c]->value_or(0.0), *err);
    }
  }
  return summary;
}

std::optional<CompareSummary> run_sweep(const SweepConfig& cfg, std::ostream& csv) {
  switch (cfg.mode) {
    case SweepMode::time_sweep: run_time_sweep(cfg, csv); return std::nullopt;
    case SweepMode::n_sweep: run_n_sweep(cfg, csv); return std::nullopt;
    case SweepMode::partition_sweep: run_partition_sweep(cfg, csv); return std::nullopt;
    case SweepMode::compare: return run_compare(cfg, csv);
  }
  return std::nullopt;
}

}  // namespace catneg
