#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace syz {

/// Symbols of a Betti template for property N_q.
enum class Cell {
  star,     // nonzero by N_q
  dash,     // zero by N_q
  zero,     // zero since t_i <= 2i - 1
  ovoid,    // zero when p is good for i
  triup,    // zero if t_i <= ceil(i/q) + i
  tridown,  // no information
};

char cell_symbol(Cell c);

/// Classification of column i, row j (the entry beta_{i, i+j}).
Cell classify_cell(int q, int i, int j);

struct TemplateGrid {
  int q = 2;
  int columns = 0;  // 0 .. columns-1
  int rows = 0;     // 0 .. rows-1
  std::vector<std::vector<Cell>> cells;  // [row][column]
  std::vector<std::optional<std::uint32_t>> bottom;

  /// ASCII rendering with a legend header.
  std::string to_text() const;
};

/// Requires q >= 2.
TemplateGrid render_template(int q, int columns, int rows);

}  // namespace syz
