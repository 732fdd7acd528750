#include "syzygy/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace syz {

template <class F>
SparseVector<F> to_sparse(const F& field, const std::vector<typename F::Element>& dense) {
  SparseVector<F> out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!field.is_zero(dense[i])) out.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
  return out;
}

template <class F>
std::vector<typename F::Element> to_dense(const F& field, const SparseVector<F>& v,
                                          std::size_t dim) {
  std::vector<typename F::Element> out(dim, field.zero());
  for (const auto& [i, x] : v) {
    if (i >= dim) throw std::out_of_range("sparse index beyond dimension");
    out[i] = x;
  }
  return out;
}

template <class F>
SparseVector<F> axpy(const F& field, const SparseVector<F>& a, const typename F::Element& s,
                     const SparseVector<F>& b) {
  SparseVector<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      auto x = field.mul(s, b[j].second);
      if (!field.is_zero(x)) out.emplace_back(b[j].first, std::move(x));
      ++j;
    } else {
      auto x = field.add(a[i].second, field.mul(s, b[j].second));
      if (!field.is_zero(x)) out.emplace_back(a[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
SparseVector<F> scale(const F& field, const SparseVector<F>& a, const typename F::Element& s) {
  SparseVector<F> out;
  if (field.is_zero(s)) return out;
  out.reserve(a.size());
  for (const auto& [i, x] : a) out.emplace_back(i, field.mul(x, s));
  return out;
}

// --- SparseMatrix ---------------------------------------------------------

template <class F>
SparseMatrix<F>::SparseMatrix(F field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), columns_(cols) {}

template <class F>
SparseMatrix<F> SparseMatrix<F>::from_dense(const Matrix<F>& m) {
  SparseMatrix out(m.field(), m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out.columns_[c] = to_sparse(m.field(), m.column(c));
  return out;
}

template <class F>
Matrix<F> SparseMatrix<F>::to_dense() const {
  Matrix<F> m(field_, rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, x] : columns_[c]) m(r, c) = x;
  return m;
}

template <class F>
SparseVector<F> SparseMatrix<F>::apply(const SparseVector<F>& v) const {
  std::vector<Element> acc(rows_, field_.zero());
  std::vector<std::uint32_t> touched;
  for (const auto& [c, x] : v) {
    if (c >= cols()) throw std::out_of_range("SparseMatrix::apply: vector too long");
    for (const auto& [r, y] : columns_[c]) {
      if (field_.is_zero(acc[r])) touched.push_back(r);
      acc[r] = field_.add(acc[r], field_.mul(x, y));
    }
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  SparseVector<F> out;
  for (auto r : touched)
    if (!field_.is_zero(acc[r])) out.emplace_back(r, acc[r]);
  return out;
}

template <class F>
SparseMatrix<F> SparseMatrix<F>::multiply(const SparseMatrix& other) const {
  if (!(field_ == other.field_)) throw FieldMismatch("sparse multiply across fields");
  if (cols() != other.rows_) throw std::invalid_argument("sparse multiply: shape mismatch");
  SparseMatrix out(field_, rows_, other.cols());
  for (std::size_t c = 0; c < other.cols(); ++c) out.columns_[c] = apply(other.columns_[c]);
  return out;
}

template <class F>
std::size_t SparseMatrix<F>::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

template <class F>
bool SparseMatrix<F>::is_zero() const {
  for (const auto& c : columns_)
    if (!c.empty()) return false;
  return true;
}

// --- EchelonBasis ---------------------------------------------------------

template <class F>
EchelonBasis<F>::EchelonBasis(F field, std::size_t ambient_dim, bool track_combinations)
    : field_(std::move(field)),
      dim_(ambient_dim),
      track_(track_combinations),
      row_of_pivot_(ambient_dim, -1) {}

template <class F>
SparseVector<F> EchelonBasis<F>::reduce_impl(Vec cur, Vec* combination) const {
  Vec next;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    auto c = cur[pos].first;
    if (c >= dim_) throw std::out_of_range("EchelonBasis: index beyond ambient dimension");
    auto r = row_of_pivot_[c];
    if (r < 0) {
      ++pos;
      continue;
    }
    auto factor = field_.neg(cur[pos].second);
    const Vec& row = rows_[static_cast<std::size_t>(r)];
    // Entries before pos are untouched: every stored row starts at its pivot.
    next.clear();
    next.reserve(cur.size() + row.size());
    next.insert(next.end(), cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos));
    std::size_t i = pos, j = 0;
    while (i < cur.size() || j < row.size()) {
      if (j == row.size() || (i < cur.size() && cur[i].first < row[j].first)) {
        next.push_back(cur[i++]);
      } else if (i == cur.size() || row[j].first < cur[i].first) {
        next.emplace_back(row[j].first, field_.mul(factor, row[j].second));
        ++j;
      } else {
        auto x = field_.add(cur[i].second, field_.mul(factor, row[j].second));
        if (!field_.is_zero(x)) next.emplace_back(cur[i].first, std::move(x));
        ++i;
        ++j;
      }
    }
    std::swap(cur, next);
    if (combination) *combination = axpy(field_, *combination, field_.neg(factor), combos_[r]);
  }
  return cur;
}

template <class F>
SparseVector<F> EchelonBasis<F>::reduce(const Vec& v, Vec* combination) const {
  if (combination) {
    if (!track_) throw std::logic_error("EchelonBasis::reduce: combinations need tracking");
    combination->clear();
  }
  return reduce_impl(v, combination);
}

template <class F>
bool EchelonBasis<F>::insert(const Vec& v) {
  Vec combo;
  Vec rem = reduce_impl(v, track_ ? &combo : nullptr);
  if (rem.empty()) return false;
  auto lead_inv = field_.inv(rem.front().second);
  auto pivot = rem.front().first;
  rem = scale(field_, rem, lead_inv);
  if (track_) {
    // rem = v - combo . generators, and v is the new generator number rank().
    Vec self{{static_cast<std::uint32_t>(rows_.size()), field_.one()}};
    Vec full = axpy(field_, self, field_.neg(field_.one()), combo);
    combos_.push_back(scale(field_, full, lead_inv));
  }
  row_of_pivot_[pivot] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(rem));
  return true;
}

template <class F>
std::optional<SparseVector<F>> EchelonBasis<F>::coordinates(const Vec& v) const {
  Vec combo;
  Vec rem = reduce(v, &combo);
  if (!rem.empty()) return std::nullopt;
  return combo;
}

template <class F>
std::vector<std::uint32_t> EchelonBasis<F>::pivot_columns() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < dim_; ++c)
    if (row_of_pivot_[c] >= 0) out.push_back(c);
  return out;
}

template <class F>
std::vector<std::uint32_t> EchelonBasis<F>::free_columns() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < dim_; ++c)
    if (row_of_pivot_[c] < 0) out.push_back(c);
  return out;
}

template <class F>
std::vector<SparseVector<F>> EchelonBasis<F>::reduced_rows() const {
  std::vector<Vec> out;
  for (auto p : pivot_columns()) {
    const Vec& row = rows_[static_cast<std::size_t>(row_of_pivot_[p])];
    Vec tail(row.begin() + 1, row.end());
    Vec reduced = reduce_impl(std::move(tail), nullptr);
    reduced.insert(reduced.begin(), row.front());
    out.push_back(std::move(reduced));
  }
  return out;
}

template <class F>
std::size_t sparse_rank(const SparseMatrix<F>& m) {
  // Eliminate along the shorter dimension's vectors; columns are stored, so
  // treat them as vectors in k^rows.
  EchelonBasis<F> basis(m.field(), m.rows());
  std::vector<std::size_t> order(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.column(a).size() < m.column(b).size();
  });
  for (auto c : order) {
    if (m.column(c).empty()) continue;
    basis.insert(m.column(c));
    if (basis.rank() == m.rows()) break;
  }
  return basis.rank();
}

template <class F>
std::vector<SparseVector<F>> sparse_kernel(const SparseMatrix<F>& m) {
  // Row vectors of m live in k^cols.
  std::vector<SparseVector<F>> row_vectors(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, x] : m.column(c)) row_vectors[r].emplace_back(static_cast<std::uint32_t>(c), x);
  EchelonBasis<F> basis(m.field(), m.cols());
  for (const auto& row : row_vectors)
    if (!row.empty()) basis.insert(row);
  const F& k = m.field();
  std::vector<std::int64_t> slot(m.cols(), -1);
  std::vector<SparseVector<F>> kernel;
  for (auto f : basis.free_columns()) {
    slot[f] = static_cast<std::int64_t>(kernel.size());
    kernel.push_back({{f, k.one()}});
  }
  for (const auto& row : basis.reduced_rows()) {
    auto pivot = row.front().first;
    for (std::size_t t = 1; t < row.size(); ++t)
      kernel[static_cast<std::size_t>(slot[row[t].first])].emplace_back(pivot, k.neg(row[t].second));
  }
  for (auto& v : kernel) std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return kernel;
}

#define SYZ_INSTANTIATE_SPARSE(F)                                                             \
  template SparseVector<F> to_sparse(const F&, const std::vector<F::Element>&);               \
  template std::vector<F::Element> to_dense(const F&, const SparseVector<F>&, std::size_t);   \
  template SparseVector<F> axpy(const F&, const SparseVector<F>&, const F::Element&,          \
                                const SparseVector<F>&);                                      \
  template SparseVector<F> scale(const F&, const SparseVector<F>&, const F::Element&);        \
  template class SparseMatrix<F>;                                                             \
  template class EchelonBasis<F>;                                                             \
  template std::size_t sparse_rank(const SparseMatrix<F>&);                                   \
  template std::vector<SparseVector<F>> sparse_kernel(const SparseMatrix<F>&);

SYZ_INSTANTIATE_SPARSE(PrimeField)
SYZ_INSTANTIATE_SPARSE(RationalField)

}  // namespace syz
