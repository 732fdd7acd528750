#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "syzygy/field.hpp"
#include "syzygy/matrix.hpp"

namespace syz {

/// Sparse vector: (index, value) pairs with strictly increasing indices and no
/// stored zeros.
template <class F>
using SparseVector = std::vector<std::pair<std::uint32_t, typename F::Element>>;

template <class F>
SparseVector<F> to_sparse(const F& field, const std::vector<typename F::Element>& dense);

template <class F>
std::vector<typename F::Element> to_dense(const F& field, const SparseVector<F>& v,
                                          std::size_t dim);

/// a + s * b
template <class F>
SparseVector<F> axpy(const F& field, const SparseVector<F>& a, const typename F::Element& s,
                     const SparseVector<F>& b);

template <class F>
SparseVector<F> scale(const F& field, const SparseVector<F>& a, const typename F::Element& s);

/// Column-major sparse matrix.
template <class F>
class SparseMatrix {
 public:
  using Element = typename F::Element;

  SparseMatrix(F field, std::size_t rows, std::size_t cols);
  static SparseMatrix from_dense(const Matrix<F>& m);

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  const SparseVector<F>& column(std::size_t c) const { return columns_[c]; }
  SparseVector<F>& column(std::size_t c) { return columns_[c]; }
  void set_column(std::size_t c, SparseVector<F> v) { columns_[c] = std::move(v); }
  void push_column(SparseVector<F> v) { columns_.push_back(std::move(v)); }

  Matrix<F> to_dense() const;
  /// this * v for a sparse vector v of length cols().
  SparseVector<F> apply(const SparseVector<F>& v) const;
  SparseMatrix multiply(const SparseMatrix& other) const;
  std::size_t nonzeros() const;
  bool is_zero() const;

 private:
  F field_;
  std::size_t rows_;
  std::vector<SparseVector<F>> columns_;
};

/// Incrementally built echelon basis of a subspace of k^n.
///
/// Every stored row has a leading 1 at its pivot column and all pivot columns
/// are distinct. The pivot set equals the pivot set of the reduced row echelon
/// form of everything inserted, independent of insertion order. Reduction
/// leaves a remainder supported on non-pivot columns, so non-pivot unit
/// vectors give canonical quotient coordinates.
///
/// With tracking enabled each row also records its expression in the accepted
/// generators (numbered 0, 1, ... in acceptance order).
template <class F>
class EchelonBasis {
 public:
  using Element = typename F::Element;
  using Vec = SparseVector<F>;

  EchelonBasis(F field, std::size_t ambient_dim, bool track_combinations = false);

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool tracking() const { return track_; }

  /// Remainder of v modulo the span. If `combination` is non-null (tracking
  /// required) it receives c with v = remainder + sum_g c_g * generator_g.
  Vec reduce(const Vec& v, Vec* combination = nullptr) const;
  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Returns true when v was independent and got added.
  bool insert(const Vec& v);

  /// Coordinates of v in the accepted generators, nullopt if v is outside the
  /// span. Requires tracking.
  std::optional<Vec> coordinates(const Vec& v) const;

  bool is_pivot(std::uint32_t column) const { return row_of_pivot_[column] >= 0; }
  std::vector<std::uint32_t> pivot_columns() const;
  std::vector<std::uint32_t> free_columns() const;
  /// Stored rows in insertion order; each has a leading 1 at its pivot.
  const std::vector<Vec>& rows() const { return rows_; }
  /// Rows of the reduced row echelon form, ordered by pivot column.
  std::vector<Vec> reduced_rows() const;

 private:
  Vec reduce_impl(Vec v, Vec* combination) const;

  F field_;
  std::size_t dim_;
  bool track_;
  std::vector<std::int32_t> row_of_pivot_;
  std::vector<Vec> rows_;
  std::vector<Vec> combos_;
};

/// Rank of a sparse matrix (any pivot order; rank is order independent).
template <class F>
std::size_t sparse_rank(const SparseMatrix<F>& m);

/// Basis of the right null space as sparse vectors.
template <class F>
std::vector<SparseVector<F>> sparse_kernel(const SparseMatrix<F>& m);

}  // namespace syz
