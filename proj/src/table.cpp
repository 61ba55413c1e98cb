#include "selinf/table.hpp"
#include "selinf/error.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace selinf {

namespace {

std::string format_number(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string cell_text(const OutputTable::Cell& c, int digits) {
  if (std::holds_alternative<std::monostate>(c)) return "";
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return format_number(std::get<double>(c), digits);
}

} // namespace

void OutputTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size())
    throw Error("table row width does not match column count");
  rows_.push_back(std::move(row));
}

std::string OutputTable::render(TableFormat format, int digits) const {
  if (format == TableFormat::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rows_) {
      nlohmann::json obj;
      for (size_t c = 0; c < columns_.size(); ++c) {
        const Cell& cell = row[c];
        if (std::holds_alternative<std::monostate>(cell))
          obj[columns_[c]] = nullptr;
        else if (const auto* s = std::get_if<std::string>(&cell))
          obj[columns_[c]] = *s;
        else
          obj[columns_[c]] = std::get<double>(cell);
      }
      rows.push_back(std::move(obj));
    }
    nlohmann::json out;
    out["columns"] = columns_;
    out["rows"] = std::move(rows);
    return out.dump(2) + "\n";
  }

  std::ostringstream os;
  if (format == TableFormat::csv) {
    for (size_t c = 0; c < columns_.size(); ++c)
      os << (c ? "," : "") << columns_[c];
    os << "\n";
    for (const auto& row : rows_) {
      for (size_t c = 0; c < columns_.size(); ++c)
        os << (c ? "," : "") << cell_text(row[c], digits);
      os << "\n";
    }
    return os.str();
  }

  // text: pad columns to their widest entry
  std::vector<size_t> w(columns_.size());
  for (size_t c = 0; c < columns_.size(); ++c) w[c] = columns_[c].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows_) {
    std::vector<std::string> r;
    for (size_t c = 0; c < columns_.size(); ++c) {
      r.push_back(cell_text(row[c], digits));
      w[c] = std::max(w[c], r.back().size());
    }
    cells.push_back(std::move(r));
  }
  for (size_t c = 0; c < columns_.size(); ++c) {
    os << (c ? "  " : "");
    os << columns_[c] << std::string(w[c] - columns_[c].size(), ' ');
  }
  os << "\n";
  for (const auto& r : cells) {
    for (size_t c = 0; c < columns_.size(); ++c) {
      os << (c ? "  " : "");
      os << r[c] << std::string(w[c] - r[c].size(), ' ');
    }
    os << "\n";
  }
  return os.str();
}

} // namespace selinf
