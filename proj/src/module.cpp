#include "syzygy/module.hpp"

#include <algorithm>
#include <limits>

namespace syz {

template <class F>
LinearizedModule<F>::LinearizedModule(F field, int num_vars, int d_min)
    : field_(std::move(field)), e_(num_vars), d_min_(d_min) {}

template <class F>
std::size_t LinearizedModule<F>::dim(int d) const {
  if (d < d_min_) return 0;
  if (d <= d_max()) return dims_[static_cast<std::size_t>(d - d_min_)];
  if (top_.is_finite() && d > top_.value()) return 0;
  throw TruncationError("module piece of degree " + std::to_string(d) +
                        " is beyond the materialized bound " + std::to_string(d_max()));
}

template <class F>
const SparseMatrix<F>& LinearizedModule<F>::action(int v, int d) const {
  if (v < 0 || v >= e_) throw std::out_of_range("module action: variable index");
  if (d >= d_min_ && d < d_max()) return actions_[static_cast<std::size_t>(d - d_min_)][v];
  std::size_t rows = dim(d + 1), cols = dim(d);
  if (rows != 0 && cols != 0)
    throw TruncationError("module action from degree " + std::to_string(d) + " is not materialized");
  for (const auto& z : zero_)
    if (z.rows() == rows && z.cols() == cols) return z;
  zero_.emplace_back(field_, rows, cols);
  return zero_.back();
}

template <class F>
void LinearizedModule<F>::push_first(std::size_t dim) {
  if (!dims_.empty()) throw std::logic_error("push_first on a non-empty module");
  dims_.push_back(dim);
}

template <class F>
void LinearizedModule<F>::push_degree(std::size_t dim, std::vector<SparseMatrix<F>> actions_in) {
  if (dims_.empty()) throw std::logic_error("push_degree before push_first");
  if (static_cast<int>(actions_in.size()) != e_) throw std::invalid_argument("one action per variable expected");
  for (const auto& m : actions_in)
    if (m.rows() != dim || m.cols() != dims_.back())
      throw std::invalid_argument("action matrix shape mismatch");
  dims_.push_back(dim);
  actions_.push_back(std::move(actions_in));
}

template <class F>
bool LinearizedModule<F>::actions_commute() const {
  for (int d = d_min_; d + 2 <= d_max(); ++d)
    for (int v = 0; v < e_; ++v)
      for (int w = v + 1; w < e_; ++w) {
        auto vw = action(v, d + 1).multiply(action(w, d));
        auto wv = action(w, d + 1).multiply(action(v, d));
        for (std::size_t c = 0; c < vw.cols(); ++c)
          if (vw.column(c) != wv.column(c)) return false;
      }
  return true;
}

template <class F>
ExtInt LinearizedModule<F>::observed_top() const {
  for (int d = d_max(); d >= d_min_; --d)
    if (dims_[static_cast<std::size_t>(d - d_min_)] != 0) return d;
  return ExtInt::neg_inf();
}

template <class F>
LinearizedModule<F> algebra_module(const QuotientAlgebra<F>& a, int D) {
  LinearizedModule<F> m(a.field(), a.num_vars(), 0);
  m.push_first(a.dim(0));
  for (int d = 1; d <= D; ++d) {
    std::vector<SparseMatrix<F>> acts;
    for (int v = 0; v < a.num_vars(); ++v) acts.push_back(a.action_matrix(v, d - 1));
    m.push_degree(a.dim(d), std::move(acts));
    if (a.dim(d) == 0) {
      // R is generated in degree 1, so it vanishes from here on.
      m.set_top(d - 1);
      break;
    }
  }
  return m;
}

template <class F>
LinearizedModule<F> residue_field(const QuotientAlgebra<F>& a) {
  LinearizedModule<F> m(a.field(), a.num_vars(), 0);
  m.push_first(1);
  m.set_top(0);
  return m;
}

template <class F>
LinearizedModule<F> linearize_module(const QuotientAlgebra<F>& a, const Presentation& p, int D) {
  using Vec = SparseVector<F>;
  const F& k = a.field();
  int e = a.num_vars();
  std::size_t ngen = p.generator_degrees.size();
  if (p.relations.size() != p.relation_degrees.size())
    throw std::invalid_argument("presentation: relation degree list has the wrong length");
  for (std::size_t l = 0; l < p.relations.size(); ++l) {
    if (p.relations[l].size() != ngen)
      throw std::invalid_argument("presentation: relation " + std::to_string(l) + " has " +
                                  std::to_string(p.relations[l].size()) + " components, expected " +
                                  std::to_string(ngen));
    for (std::size_t g = 0; g < ngen; ++g) {
      const auto& f = p.relations[l][g];
      if (f.is_zero()) continue;
      if (!f.is_homogeneous() || f.degree() != p.relation_degrees[l] - p.generator_degrees[g])
        throw std::invalid_argument("presentation: entry (" + std::to_string(l) + "," + std::to_string(g) +
                                    ") has inconsistent degree");
    }
  }
  int d_min = ngen ? *std::min_element(p.generator_degrees.begin(), p.generator_degrees.end()) : 0;
  int gen_top = ngen ? *std::max_element(p.generator_degrees.begin(), p.generator_degrees.end()) : 0;
  LinearizedModule<F> m(k, e, d_min);
  if (ngen == 0) {
    m.push_first(0);
    m.set_top(ExtInt::neg_inf());
    return m;
  }

  // Free module F_0 in degree d: blocks R_{d - a_g}.
  auto offsets = [&](int d) {
    std::vector<std::size_t> off(ngen + 1, 0);
    for (std::size_t g = 0; g < ngen; ++g) off[g + 1] = off[g] + a.dim(d - p.generator_degrees[g]);
    return off;
  };
  auto times_var = [&](int v, int d, const Vec& x) {
    auto src = offsets(d), dst = offsets(d + 1);
    Vec out;
    for (std::size_t g = 0; g < ngen; ++g) {
      Vec block;
      for (const auto& [i, c] : x)
        if (i >= src[g] && i < src[g + 1]) block.emplace_back(static_cast<std::uint32_t>(i - src[g]), c);
      if (block.empty()) continue;
      for (const auto& [i, c] : a.action_matrix(v, d - p.generator_degrees[g]).apply(block))
        out.emplace_back(static_cast<std::uint32_t>(i + dst[g]), c);
    }
    return out;
  };

  std::vector<EchelonBasis<F>> rel;  // relations submodule per degree
  std::vector<std::vector<std::uint32_t>> basis;
  for (int d = d_min; d <= D; ++d) {
    auto off = offsets(d);
    EchelonBasis<F> n(k, off[ngen]);
    if (d > d_min)
      for (const auto& row : rel.back().rows())
        for (int v = 0; v < e; ++v) n.insert(times_var(v, d - 1, row));
    for (std::size_t l = 0; l < p.relations.size(); ++l) {
      if (p.relation_degrees[l] != d) continue;
      Vec x;
      for (std::size_t g = 0; g < ngen; ++g)
        for (const auto& [i, c] : a.normal_form(p.relations[l][g]))
          x.emplace_back(static_cast<std::uint32_t>(i + off[g]), c);
      n.insert(x);
    }
    auto free = n.free_columns();
    std::vector<std::int32_t> pos(off[ngen], -1);
    for (std::size_t i = 0; i < free.size(); ++i) pos[free[i]] = static_cast<std::int32_t>(i);
    if (d == d_min) {
      m.push_first(free.size());
    } else {
      std::vector<SparseMatrix<F>> acts;
      for (int v = 0; v < e; ++v) {
        SparseMatrix<F> act(k, free.size(), basis.back().size());
        for (std::size_t c = 0; c < basis.back().size(); ++c) {
          Vec img = n.reduce(times_var(v, d - 1, Vec{{basis.back()[c], k.one()}}));
          for (auto& [i, x] : img) i = static_cast<std::uint32_t>(pos[i]);
          act.set_column(c, std::move(img));
        }
        acts.push_back(std::move(act));
      }
      m.push_degree(free.size(), std::move(acts));
    }
    rel.push_back(std::move(n));
    basis.push_back(std::move(free));
    if (d >= gen_top && basis.back().empty()) {
      m.set_top(m.observed_top());
      break;
    }
  }
  return m;
}

#define SYZ_INSTANTIATE_MODULE(F)                                                   \
  template class LinearizedModule<F>;                                               \
  template LinearizedModule<F> algebra_module(const QuotientAlgebra<F>&, int);      \
  template LinearizedModule<F> residue_field(const QuotientAlgebra<F>&);            \
  template LinearizedModule<F> linearize_module(const QuotientAlgebra<F>&, const Presentation&, int);

SYZ_INSTANTIATE_MODULE(PrimeField)
SYZ_INSTANTIATE_MODULE(RationalField)

}  // namespace syz
