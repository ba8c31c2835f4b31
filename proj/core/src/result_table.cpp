#include "sqzcav/result_table.hpp"

#include "sqzcav/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sqzcav {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw InvalidArgument("format_double: conversion failed");
  return {buf, ptr};
}

std::string format_double(double v, int significant_digits) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, significant_digits);
  if (ec != std::errc{}) throw InvalidArgument("format_double: conversion failed");
  return {buf, ptr};
}

void ResultTable::add_row(std::vector<double> row) {
  if (row.size() != columns_.size())
    throw InvalidArgument("ResultTable: row has " + std::to_string(row.size()) +
                          " cells, expected " + std::to_string(columns_.size()));
  rows_.push_back(std::move(row));
}

void ResultTable::add_provenance(std::string key, std::string value) {
  if (key.find_first_of(":\n") != std::string::npos || value.find('\n') != std::string::npos)
    throw InvalidArgument("ResultTable: provenance key/value must be single-line");
  provenance.emplace_back(std::move(key), std::move(value));
}

const std::string& ResultTable::provenance_value(const std::string& key) const {
  for (const auto& [k, v] : provenance)
    if (k == key) return v;
  throw InvalidArgument("ResultTable: no provenance entry '" + key + "'");
}

std::size_t ResultTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i].name == name) return i;
  throw InvalidArgument("ResultTable: no column '" + name + "'");
}

bool ResultTable::has_column(const std::string& name) const {
  for (const auto& c : columns_)
    if (c.name == name) return true;
  return false;
}

std::vector<double> ResultTable::column(const std::string& name) const {
  const std::size_t k = column_index(name);
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r[k]);
  return out;
}

void ResultTable::write_csv(std::ostream& out) const {
  for (const auto& [k, v] : provenance) out << "# " << k << ": " << v << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i)
    out << (i ? "," : "") << columns_[i].name << '[' << columns_[i].unit << ']';
  out << '\n';
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << format_double(r[i]);
    out << '\n';
  }
}

std::string ResultTable::to_csv() const {
  std::ostringstream os;
  write_csv(os);
  return os.str();
}

void ResultTable::save_csv(const std::filesystem::path& path) const {
  // write to a sibling file first so a failed run never leaves a partial table
  const std::filesystem::path tmp = path.string() + ".part";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write " + tmp.string());
    write_csv(out);
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

double parse_cell(const std::string& s, std::size_t line_no) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw InvalidArgument("CSV line " + std::to_string(line_no) + ": bad number '" + s + "'");
  return v;
}

}  // namespace

ResultTable ResultTable::read_csv(std::istream& in) {
  ResultTable t;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header && line.rfind("# ", 0) == 0) {
      const std::size_t colon = line.find(": ", 2);
      if (colon == std::string::npos)
        throw InvalidArgument("CSV line " + std::to_string(line_no) + ": malformed provenance");
      t.provenance.emplace_back(line.substr(2, colon - 2), line.substr(colon + 2));
      continue;
    }
    if (!header) {
      for (const std::string& cell : split(line)) {
        const std::size_t lb = cell.find('[');
        if (lb == std::string::npos || cell.back() != ']')
          throw InvalidArgument("CSV header cell '" + cell + "' is not name[unit]");
        t.columns_.push_back({cell.substr(0, lb), cell.substr(lb + 1, cell.size() - lb - 2)});
      }
      header = true;
      continue;
    }
    if (line.empty()) continue;
    std::vector<double> row;
    for (const std::string& cell : split(line)) row.push_back(parse_cell(cell, line_no));
    t.add_row(std::move(row));
  }
  if (!header) throw InvalidArgument("CSV has no header row");
  return t;
}

ResultTable ResultTable::parse_csv(const std::string& text) {
  std::istringstream is(text);
  return read_csv(is);
}

}  // namespace sqzcav
