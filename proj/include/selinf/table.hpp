#ifndef SELINF_TABLE_HPP
#define SELINF_TABLE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace selinf {

enum class TableFormat { text, csv, json };

// A rendered-result table: every cell is a string, a number, or an explicit
// null (e.g. the absent final-step Lemma-2 entry).
class OutputTable {
public:
  using Cell = std::variant<std::monostate, std::string, double>;

  explicit OutputTable(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& columns() const { return columns_; }
  size_t n_rows() const { return rows_.size(); }
  const Cell& at(size_t row, size_t col) const { return rows_[row][col]; }

  std::string render(TableFormat format, int digits) const;

private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

} // namespace selinf

#endif
