#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catneg/linalg.hpp"

namespace catneg::csv {

/// 12 significant digits, shortest of fixed/scientific, '.' separator,
/// independent of the global locale.
std::string format_number(double v);

/// Empty cell for std::nullopt.
std::string format_optional(const std::optional<double>& v);

/// "value x multiplicity" pairs joined by ';', e.g. "-0.414132362188x1;-0.00154904x8".
std::string encode_groups(const DegeneracyGroups& g);
DegeneracyGroups decode_groups(std::string_view cell);

std::string join(const std::vector<std::string>& cells, char sep = ',');
std::vector<std::string> split(std::string_view line, char sep = ',');

double parse_number(std::string_view cell);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string_view name) const;
  double number(std::size_t row, std::string_view name) const;
  std::optional<double> optional_number(std::size_t row, std::string_view name) const;
};

Table parse(std::string_view text);

}  // namespace catneg::csv
