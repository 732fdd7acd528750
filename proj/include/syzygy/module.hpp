#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "syzygy/algebra.hpp"
#include "syzygy/extint.hpp"
#include "syzygy/sparse.hpp"

namespace syz {

/// A graded module known through degree d_max(): per-degree dimensions and,
/// for every variable, the multiplication maps M_d -> M_{d+1}.
///
/// `top` records a certified vanishing bound (M_d = 0 for d > top). When it is
/// finite the pieces above d_max() are known to be zero; otherwise asking for
/// them raises TruncationError.
template <class F>
class LinearizedModule {
 public:
  using Vec = SparseVector<F>;

  LinearizedModule(F field, int num_vars, int d_min);

  const F& field() const { return field_; }
  int num_vars() const { return e_; }
  int d_min() const { return d_min_; }
  int d_max() const { return d_min_ + static_cast<int>(dims_.size()) - 1; }
  ExtInt top() const { return top_; }
  void set_top(ExtInt t) { top_ = t; }

  bool known(int d) const { return d < d_min_ || d <= d_max() || (top_.is_finite() && d > top_.value()); }
  std::size_t dim(int d) const;
  /// Multiplication by x_v from degree d to d+1.
  const SparseMatrix<F>& action(int v, int d) const;
  Vec apply(int v, int d, const Vec& m) const { return action(v, d).apply(m); }

  /// Appends degree d_max()+1; `actions_in[v]` maps the previous top piece to it.
  void push_degree(std::size_t dim, std::vector<SparseMatrix<F>> actions_in);
  /// First degree: only the dimension.
  void push_first(std::size_t dim);

  /// Dimensions d_min..d_max.
  const std::vector<std::size_t>& dims() const { return dims_; }
  /// x_v x_w == x_w x_v on every materialized degree pair.
  bool actions_commute() const;
  /// Highest degree with a nonzero piece inside the window, -inf if none.
  ExtInt observed_top() const;

 private:
  F field_;
  int e_;
  int d_min_;
  ExtInt top_ = ExtInt::pos_inf();
  std::vector<std::size_t> dims_;
  std::vector<std::vector<SparseMatrix<F>>> actions_;  // [d - d_min][v], d < d_max
  mutable std::deque<SparseMatrix<F>> zero_;
};

/// R itself through degree D (top set when R is Artinian within the window).
template <class F>
LinearizedModule<F> algebra_module(const QuotientAlgebra<F>& a, int D);

/// The residue field k = R/R_+ concentrated in degree 0.
template <class F>
LinearizedModule<F> residue_field(const QuotientAlgebra<F>& a);

/// Cokernel of a graded map between free R-modules.
/// relations[l][k] is the component on generator k of relation l, a form of
/// degree relation_degrees[l] - generator_degrees[k] (or zero).
struct Presentation {
  std::vector<int> generator_degrees;
  std::vector<int> relation_degrees;
  std::vector<std::vector<Polynomial>> relations;
};

template <class F>
LinearizedModule<F> linearize_module(const QuotientAlgebra<F>& a, const Presentation& p, int D);

/// JSON form: {"generator_degrees": [..], "relations": [{"degree": d,
/// "components": [polynomial per generator]}]}, polynomials as in ideal files.
/// Errors are ParseError with a JSON-pointer location.
std::string presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const std::string& text, int num_vars);
Presentation read_presentation_file(const std::string& path, int num_vars);

}  // namespace syz
