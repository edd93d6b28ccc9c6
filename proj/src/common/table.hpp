#pragma once

#include <string>
#include <vector>

namespace qclab {

// Tabular experiment output: named double columns plus provenance lines that
// the writers emit as a '#'-prefixed header block.
struct Table {
  std::vector<std::string> meta;     // resolved experiment spec, one line each
  std::vector<std::string> columns;  // column names
  std::vector<double> cells;         // row-major, rows*columns

  std::size_t rows() const {
    return columns.empty() ? 0 : cells.size() / columns.size();
  }
  double at(std::size_t r, std::size_t c) const { return cells[r * columns.size() + c]; }
  void add_row(const std::vector<double>& row) {
    cells.insert(cells.end(), row.begin(), row.end());
  }
};

// CSV per the external contract: '#' meta block, comma separator, '\n'
// terminators, floats with 17 significant digits.
std::string table_to_csv(const Table& t);
std::string table_to_json(const Table& t);

}  // namespace qclab
