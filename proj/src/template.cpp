#include "syzygy/template.hpp"

#include <sstream>
#include <stdexcept>

#include "syzygy/numtheory.hpp"

namespace syz {

namespace {

int zero_row_bound(int q, int i) { return 2 * (i / (q + 1)) + (i % (q + 1) == 0 ? 0 : 1); }

}  // namespace

char cell_symbol(Cell c) {
  switch (c) {
    case Cell::star: return '*';
    case Cell::dash: return '-';
    case Cell::zero: return '0';
    case Cell::ovoid: return 'o';
    case Cell::triup: return '^';
    case Cell::tridown: return 'v';
  }
  return '?';
}

Cell classify_cell(int q, int i, int j) {
  if ((i == 0 && j == 0) || (i >= 1 && i <= q && j == 1)) return Cell::star;
  if ((i == 0 && j > 0) || (i >= 1 && j == 0) || (i >= 1 && i <= q && j >= 2)) return Cell::dash;
  if (i > q && j >= i) return Cell::zero;
  if (j > zero_row_bound(q, i)) return Cell::ovoid;
  if (j > (i + q - 1) / q) return Cell::triup;
  return Cell::tridown;
}

TemplateGrid render_template(int q, int columns, int rows) {
  if (q < 2) throw std::invalid_argument("render_template: q must be at least 2");
  if (columns < 1 || rows < 1) throw std::invalid_argument("render_template: empty grid");
  TemplateGrid g;
  g.q = q;
  g.columns = columns;
  g.rows = rows;
  g.cells.assign(static_cast<std::size_t>(rows), std::vector<Cell>(static_cast<std::size_t>(columns)));
  for (int j = 0; j < rows; ++j)
    for (int i = 0; i < columns; ++i) g.cells[j][i] = classify_cell(q, i, j);
  // The prime is listed only where the ovoid region is nonempty.
  g.bottom.resize(static_cast<std::size_t>(columns));
  for (int i = 0; i < columns; ++i)
    if (i > q && zero_row_bound(q, i) < i - 1) g.bottom[i] = exceptional_prime(i);
  return g;
}

std::string TemplateGrid::to_text() const {
  std::ostringstream os;
  os << "# Betti template for N_" << q << ": column i, row j holds beta_{i,i+j}\n"
     << "# * nonzero by N_q    - zero by N_q    0 zero since t_i <= 2i-1\n"
     << "# o zero when p is good for i (valid when p is good for i)\n"
     << "# ^ zero if t_i <= ceil(i/q)+i    v no information\n"
     << "# p: the only good prime p <= i, if any\n";
  auto pad = [&](const std::string& s) { os << std::string(s.size() < 3 ? 3 - s.size() : 0, ' ') << s; };
  pad("");
  for (int i = 0; i < columns; ++i) pad(std::to_string(i));
  os << "\n";
  for (int j = 0; j < rows; ++j) {
    pad(std::to_string(j));
    for (int i = 0; i < columns; ++i) pad(std::string(1, cell_symbol(cells[j][i])));
    os << "\n";
  }
  pad("p");
  for (int i = 0; i < columns; ++i) pad(bottom[i] ? std::to_string(*bottom[i]) : "");
  std::string out = os.str();
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out + "\n";
}

}  // namespace syz
