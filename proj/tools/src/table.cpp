#include "ptdirac_cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ptdirac::cli {

std::string format_number(double value, int precision) {
  if (value == 0.0) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  return buf;
}

Cell Cell::number(double value, int precision) {
  return {Kind::Number, format_number(value, precision)};
}

Cell Cell::scientific(double value, int significant_digits) {
  if (value == 0.0) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", significant_digits - 1, value);
  return {Kind::Number, buf};
}

Cell Cell::boolean(bool value) { return {Kind::Bool, value ? "true" : "false"}; }

Cell Cell::text_value(std::string value) { return {Kind::Text, std::move(value)}; }

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw std::logic_error("table row has " + std::to_string(row.size()) + " cells, expected " +
                           std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(row));
}

std::string Table::render(OutputFormat format) const {
  std::string out;
  if (format == OutputFormat::Csv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) out += ',';
      out += columns_[i];
    }
    out += '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += row[i].text;
      }
      out += '\n';
    }
    return out;
  }

  out += "[\n";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      const Cell& cell = rows_[r][i];
      switch (cell.kind) {
        case Cell::Kind::Number: {
          const double v = std::stod(cell.text);
          obj[columns_[i]] = std::isfinite(v) ? nlohmann::ordered_json(v)
                                              : nlohmann::ordered_json(cell.text);
          break;
        }
        case Cell::Kind::Bool:
          obj[columns_[i]] = cell.text == "true";
          break;
        case Cell::Kind::Text:
          obj[columns_[i]] = cell.text;
          break;
      }
    }
    out += "  ";
    out += obj.dump();
    if (r + 1 < rows_.size()) out += ',';
    out += '\n';
  }
  out += "]\n";
  return out;
}

}  // namespace ptdirac::cli
