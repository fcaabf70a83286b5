#include "catneg/csv.hpp"

#include <charconv>
#include <cmath>

#include "catneg/error.hpp"

namespace catneg::csv {

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return {buf, res.ptr};
}

std::string format_optional(const std::optional<double>& v) {
  return v && std::isfinite(*v) ? format_number(*v) : std::string{};
}

std::string encode_groups(const DegeneracyGroups& g) {
  std::string out;
  for (const auto& group : g.groups) {
    if (!out.empty()) out += ';';
    out += format_number(group.value);
    out += 'x';
    out += std::to_string(group.multiplicity);
  }
  return out;
}

DegeneracyGroups decode_groups(std::string_view cell) {
  DegeneracyGroups g;
  if (cell.empty()) return g;
  for (const auto& item : split(cell, ';')) {
    const auto x = item.rfind('x');
    if (x == std::string::npos) throw Error("malformed group '" + item + "'");
    const double value = parse_number(std::string_view(item).substr(0, x));
    std::size_t mult = 0;
    const auto tail = std::string_view(item).substr(x + 1);
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), mult);
    if (ec != std::errc{} || ptr != tail.data() + tail.size()) {
      throw Error("malformed multiplicity in group '" + item + "'");
    }
    g.groups.push_back({value, mult});
  }
  return g;
}

std::string join(const std::vector<std::string>& cells, char sep) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += cells[i];
  }
  return out;
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(sep, pos);
    out.emplace_back(line.substr(pos, next == std::string_view::npos ? line.npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

double parse_number(std::string_view cell) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw Error("not a number: '" + std::string(cell) + "'");
  }
  return v;
}

std::size_t Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw Error("no column named '" + std::string(name) + "'");
}

double Table::number(std::size_t row, std::string_view name) const {
  return parse_number(rows.at(row).at(column(name)));
}

std::optional<double> Table::optional_number(std::size_t row, std::string_view name) const {
  const std::string& cell = rows.at(row).at(column(name));
  if (cell.empty()) return std::nullopt;
  return parse_number(cell);
}

Table parse(std::string_view text) {
  Table t;
  bool first = true;
  for (const auto& line : split(text, '\n')) {
    if (line.empty()) continue;
    if (first) {
      t.header = split(line);
      first = false;
    } else {
      t.rows.push_back(split(line));
    }
  }
  return t;
}

}  // namespace catneg::csv
