#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/exterior.hpp"
#include "syzygy/extint.hpp"
#include "syzygy/module.hpp"
#include "syzygy/sparse.hpp"

namespace syz {

/// Strands of K^M = K (x)_R M, K the Koszul complex on x_1..x_e.
///
/// The strand (i, j) has basis e_T (x) m_b with |T| = i and m_b running over
/// the basis of M_{j-i}; its index is rank(T) * dim M_{j-i} + b. The
/// differential is
///   d(e_T (x) m) = sum_s (-1)^s e_{T - t_s} (x) x_{t_s} m,   T = {t_0 < t_1 < ...}.
/// Ranks are cached per strand; the module is held by reference.
template <class F>
class KoszulComplex {
 public:
  using Vec = SparseVector<F>;

  /// Keeps a reference to `m`.
  explicit KoszulComplex(const LinearizedModule<F>& m);
  explicit KoszulComplex(LinearizedModule<F>&&) = delete;

  const LinearizedModule<F>& module() const { return m_; }
  const F& field() const { return m_.field(); }
  int num_vars() const { return e_; }

  /// Throws TruncationError when M_{j-i} is not known.
  std::size_t strand_dim(int i, int j) const;
  /// d: strand (i, j) -> strand (i-1, j).
  SparseMatrix<F> differential(int i, int j) const;
  std::size_t differential_rank(int i, int j) const;

  std::size_t betti(int i, int j) const;

  std::vector<Vec> cycle_basis(int i, int j) const;
  std::vector<Vec> boundary_basis(int i, int j) const;
  /// Cycles independent modulo boundaries, chosen greedily from cycle_basis.
  std::vector<Vec> homology_reps(int i, int j) const;

  /// Multiplication by x_v on the module factor: strand (i, j) -> (i, j+1).
  Vec multiply_variable(int v, int i, int j, const Vec& x) const;

  std::size_t index(Subset t, std::size_t b, int i, int j) const;
  /// Size-i subsets in colex order (position = subset_rank).
  const std::vector<Subset>& subsets(int i) const { return subsets_[i]; }

 private:
  const LinearizedModule<F>& m_;
  int e_;
  std::vector<std::vector<Subset>> subsets_;  // by size
  mutable std::map<std::pair<int, int>, std::size_t> rank_cache_;
};

/// Graded Betti numbers on the window 0 <= i <= i_max, i <= j <= j_max,
/// j - i <= row_max. Column i is complete when every possibly nonzero entry
/// lies inside the window: M has finite top T (entries vanish for j > i+T) or
/// the caller supplies a certified bound on j.
struct BettiTable {
  int i_max = 0;
  int j_max = 0;
  int row_max = 0;
  std::map<std::pair<int, int>, std::size_t> values;  // every computed cell
  std::vector<bool> column_complete;
  std::vector<ExtInt> column_bound;  // certified max j, +inf when unknown

  bool computed(int i, int j) const { return values.count({i, j}) > 0; }
  /// Value of a computed cell or a cell certified zero; throws TruncationError otherwise.
  std::size_t at(int i, int j) const;
  /// t_i: largest j with a nonzero entry in column i (-inf if none seen).
  ExtInt t(int i) const;
  bool complete(int i) const { return i >= 0 && i <= i_max && column_complete[i]; }
  /// Largest i with a nonzero entry in the window.
  int observed_pd() const;

  std::string to_tsv() const;
  std::string to_json() const;
};

/// Certified bound on j for column i (return +inf for "unknown").
using ColumnBound = std::function<ExtInt(int)>;

template <class F>
BettiTable betti_table(const KoszulComplex<F>& k, int i_max, int j_max, int row_max,
                       const ColumnBound& bound = nullptr);

struct TValue {
  ExtInt value;
  bool truncated = true;
};

TValue t_value(const BettiTable& table, int i);

enum class SubmoduleKind { cycles, boundaries, cokernel };

/// Z_b, B_b or C_b = K^M_b / B_b as a graded module in degrees <= D.
template <class F>
LinearizedModule<F> submodule_linearize(const KoszulComplex<F>& k, SubmoduleKind kind, int b, int D);

}  // namespace syz
