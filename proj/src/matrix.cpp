#include "syzygy/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace syz {

template <class F>
Matrix<F>::Matrix(F field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

template <class F>
Matrix<F> Matrix<F>::identity(F field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
  return m;
}

template <class F>
Matrix<F> Matrix<F>::from_ints(F field, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix literal");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = m.field_.from_int(rows[r][c]);
  }
  return m;
}

template <class F>
Matrix<F> Matrix<F>::from_columns(F field, std::size_t rows,
                                  const std::vector<std::vector<Element>>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

template <class F>
std::vector<typename F::Element> Matrix<F>::column(std::size_t c) const {
  std::vector<Element> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

template <class F>
std::vector<typename F::Element> Matrix<F>::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

template <class F>
void Matrix<F>::append_column(const std::vector<Element>& column) {
  if (column.size() != rows_) throw std::invalid_argument("append_column: length mismatch");
  std::vector<Element> next;
  next.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) next.push_back(std::move(data_[r * cols_ + c]));
    next.push_back(column[r]);
  }
  data_ = std::move(next);
  ++cols_;
}

template <class F>
Matrix<F> Matrix<F>::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

template <class F>
void require_same_field(const Matrix<F>& a, const Matrix<F>& b) {
  if (!(a.field() == b.field()))
    throw FieldMismatch("matrices over " + a.field().spec().to_string() + " and " +
                        b.field().spec().to_string());
}

template <class F>
Matrix<F> Matrix<F>::multiply(const Matrix& other) const {
  require_same_field(*this, other);
  if (cols_ != other.rows_)
    throw std::invalid_argument("multiply: shape " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " times " + std::to_string(other.rows_) +
                                "x" + std::to_string(other.cols_));
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Element& a = (*this)(r, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        if (!field_.is_zero(other(k, c)))
          out(r, c) = field_.add(out(r, c), field_.mul(a, other(k, c)));
    }
  return out;
}

template <class F>
Matrix<F> Matrix<F>::scaled(const Element& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_.mul(x, s);
  return out;
}

template <class F>
Matrix<F> Matrix<F>::select_columns(const std::vector<std::size_t>& which) const {
  Matrix out(field_, rows_, which.size());
  for (std::size_t k = 0; k < which.size(); ++k)
    for (std::size_t r = 0; r < rows_; ++r) out(r, k) = (*this)(r, which[k]);
  return out;
}

template <class F>
Matrix<F> Matrix<F>::hstack(const Matrix& other) const {
  require_same_field(*this, other);
  if (rows_ != other.rows_) throw std::invalid_argument("hstack: row count mismatch");
  Matrix out(field_, rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

template <class F>
bool Matrix<F>::is_zero() const {
  for (const auto& x : data_)
    if (!field_.is_zero(x)) return false;
  return true;
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Matrix<F>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.field().to_string(m(r, c));
    os << "]\n";
  }
  return os;
}

template <class F>
RrefResult<F> rref(const Matrix<F>& m) {
  const F& k = m.field();
  Matrix<F> a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && k.is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    auto inv = k.inv(a(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = k.mul(a(row, c), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || k.is_zero(a(r, col))) continue;
      auto factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!k.is_zero(a(row, c))) a(r, c) = k.sub(a(r, c), k.mul(factor, a(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {pivots.size(), std::move(pivots), std::move(a)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  const F& k = m.field();
  auto [r, pivots, red] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<F> out(k, m.cols(), m.cols() - r);
  std::size_t next = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    out(free, next) = k.one();
    for (std::size_t i = 0; i < r; ++i) out(pivots[i], next) = k.neg(red(i, free));
    ++next;
  }
  return out;
}

template <class F>
Matrix<F> column_space_basis(const Matrix<F>& m) {
  return m.select_columns(rref(m).pivots);
}

template <class F>
Matrix<F> complement_in_span(const Matrix<F>& sub, const Matrix<F>& whole) {
  require_same_field(sub, whole);
  if (sub.rows() != whole.rows())
    throw std::invalid_argument("complement_in_span: ambient dimension mismatch");
  auto whole_rank = rank(whole);
  auto joint = rref(whole.hstack(sub));
  if (joint.rank != whole_rank)
    throw std::invalid_argument("complement_in_span: span(sub) is not contained in span(whole)");
  // Pivot columns of [sub | whole] beyond sub's block are exactly the columns
  // of `whole` independent modulo span(sub).
  auto ordered = rref(sub.hstack(whole));
  std::vector<std::size_t> picked;
  for (auto p : ordered.pivots)
    if (p >= sub.cols()) picked.push_back(p - sub.cols());
  return whole.select_columns(picked);
}

template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  const F& k = a.field();
  auto [r, pivots, red] = rref(a.hstack(b));
  Matrix<F> x(k, a.cols(), b.cols());
  for (std::size_t i = 0; i < r; ++i) {
    if (pivots[i] >= a.cols()) return std::nullopt;  // inconsistent row
    for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[i], c) = red(i, a.cols() + c);
  }
  return x;
}

#define SYZ_INSTANTIATE_MATRIX(F)                                                    \
  template class Matrix<F>;                                                          \
  template std::ostream& operator<<(std::ostream&, const Matrix<F>&);                \
  template RrefResult<F> rref(const Matrix<F>&);                                     \
  template std::size_t rank(const Matrix<F>&);                                       \
  template Matrix<F> kernel_basis(const Matrix<F>&);                                 \
  template Matrix<F> column_space_basis(const Matrix<F>&);                           \
  template Matrix<F> complement_in_span(const Matrix<F>&, const Matrix<F>&);         \
  template std::optional<Matrix<F>> solve(const Matrix<F>&, const Matrix<F>&);       \
  template void require_same_field(const Matrix<F>&, const Matrix<F>&);

SYZ_INSTANTIATE_MATRIX(PrimeField)
SYZ_INSTANTIATE_MATRIX(RationalField)

}  // namespace syz
