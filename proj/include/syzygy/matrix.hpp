#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "syzygy/field.hpp"

namespace syz {

/// Dense matrix over an exact field. Row-major; all entries belong to `field()`.
template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols);

  static Matrix identity(F field, std::size_t n);
  /// Integer entries mapped into the field (convenience for fixtures).
  static Matrix from_ints(F field, const std::vector<std::vector<long long>>& rows);
  static Matrix from_columns(F field, std::size_t rows,
                             const std::vector<std::vector<Element>>& columns);

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Element> column(std::size_t c) const;
  std::vector<Element> row(std::size_t r) const;
  void append_column(const std::vector<Element>& column);

  Matrix transpose() const;
  Matrix multiply(const Matrix& other) const;
  Matrix scaled(const Element& s) const;
  Matrix select_columns(const std::vector<std::size_t>& which) const;
  /// [this | other]
  Matrix hstack(const Matrix& other) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <class F>
std::ostream& operator<<(std::ostream& os, const Matrix<F>& m);

template <class F>
struct RrefResult {
  std::size_t rank;
  std::vector<std::size_t> pivots;
  Matrix<F> reduced;
};

/// Reduced row echelon form. Pivot rule: leftmost column with a nonzero entry
/// below the current row, topmost such row.
template <class F>
RrefResult<F> rref(const Matrix<F>& m);

template <class F>
std::size_t rank(const Matrix<F>& m);

/// Columns span the right null space; m * result == 0.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m);

/// Linearly independent subset of the columns of `m` spanning its column space
/// (the pivot columns of rref(m)).
template <class F>
Matrix<F> column_space_basis(const Matrix<F>& m);

/// Columns completing span(sub) to span(whole), chosen among the columns of
/// `whole` in order. Throws std::invalid_argument when span(sub) is not
/// contained in span(whole).
template <class F>
Matrix<F> complement_in_span(const Matrix<F>& sub, const Matrix<F>& whole);

/// Some x with a * x == b, or nullopt when a column of b lies outside the
/// column space of a.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b);

template <class F>
void require_same_field(const Matrix<F>& a, const Matrix<F>& b);

}  // namespace syz
