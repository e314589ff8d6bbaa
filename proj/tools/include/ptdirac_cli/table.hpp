#pragma once

#include <string>
#include <vector>

namespace ptdirac::cli {

/// One output field. Numbers are stored already formatted so CSV and JSON
/// carry the same digits.
struct Cell {
  enum class Kind { Number, Bool, Text };
  Kind kind;
  std::string text;

  static Cell number(double value, int precision);
  static Cell scientific(double value, int significant_digits);
  static Cell boolean(bool value);
  static Cell text_value(std::string value);
};

enum class OutputFormat { Csv, Json };

class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  /// Throws std::logic_error if the row width differs from the header.
  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  std::size_t size() const noexcept { return rows_.size(); }

  /// CSV: one header row, comma separated, '\n' line endings, no quoting.
  /// JSON: array of flat objects keyed by column name, one object per line.
  std::string render(OutputFormat format) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// printf-style "%.<precision>g" in the C locale; -0 is printed as 0.
std::string format_number(double value, int precision);

}  // namespace ptdirac::cli
