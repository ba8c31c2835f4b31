#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sqzcav {

struct Column {
  std::string name;
  std::string unit;  ///< "1" for dimensionless
  bool operator==(const Column&) const = default;
};

/// Long-format numeric table with a provenance block.
///
/// CSV layout: lines starting with "# key: value" first, then a header row of
/// "name[unit]" cells, then one row per record. Numbers use the shortest
/// representation that round-trips exactly.
class ResultTable {
 public:
  std::vector<std::pair<std::string, std::string>> provenance;

  ResultTable() = default;
  explicit ResultTable(std::vector<Column> columns) : columns_(std::move(columns)) {}

  const std::vector<Column>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  void add_row(std::vector<double> row);
  void add_provenance(std::string key, std::string value);
  /// Provenance value for key; throws InvalidArgument when absent.
  const std::string& provenance_value(const std::string& key) const;

  /// Index of a column by name; throws InvalidArgument when absent.
  std::size_t column_index(const std::string& name) const;
  bool has_column(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;

  void write_csv(std::ostream& out) const;
  std::string to_csv() const;
  void save_csv(const std::filesystem::path& path) const;

  static ResultTable read_csv(std::istream& in);
  static ResultTable parse_csv(const std::string& text);

  bool operator==(const ResultTable& other) const = default;

 private:
  std::vector<Column> columns_;
  std::vector<std::vector<double>> rows_;
};

/// Shortest round-trip decimal form.
std::string format_double(double v);
std::string format_double(double v, int significant_digits);

}  // namespace sqzcav
