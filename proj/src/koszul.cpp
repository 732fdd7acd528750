#include "syzygy/koszul.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace syz {

template <class F>
KoszulComplex<F>::KoszulComplex(const LinearizedModule<F>& m) : m_(m), e_(m.num_vars()) {
  if (e_ > 31) throw std::invalid_argument("Koszul complex supports at most 31 variables");
  for (int i = 0; i <= e_; ++i) subsets_.push_back(subsets_of_size(e_, i));
}

template <class F>
std::size_t KoszulComplex<F>::strand_dim(int i, int j) const {
  if (i < 0 || i > e_) return 0;
  return subsets_[i].size() * m_.dim(j - i);
}

template <class F>
std::size_t KoszulComplex<F>::index(Subset t, std::size_t b, int i, int j) const {
  return static_cast<std::size_t>(subset_rank(t)) * m_.dim(j - i) + b;
}

template <class F>
SparseMatrix<F> KoszulComplex<F>::differential(int i, int j) const {
  const F& k = field();
  std::size_t src = strand_dim(i, j);
  if (i <= 0) return SparseMatrix<F>(k, 0, src);
  std::size_t tgt = strand_dim(i - 1, j);
  SparseMatrix<F> d(k, tgt, src);
  if (src == 0 || tgt == 0) return d;
  int deg = j - i;
  std::size_t dm = m_.dim(deg), dn = m_.dim(deg + 1);
  std::vector<const SparseMatrix<F>*> act(static_cast<std::size_t>(e_));
  for (int v = 0; v < e_; ++v) act[v] = &m_.action(v, deg);
  for (std::size_t tr = 0; tr < subsets_[i].size(); ++tr) {
    Subset t = subsets_[i][tr];
    auto elems = subset_elements(t);
    for (std::size_t b = 0; b < dm; ++b) {
      Vec col;
      for (std::size_t s = 0; s < elems.size(); ++s) {
        int v = elems[s];
        std::size_t base = static_cast<std::size_t>(subset_rank(t & ~(Subset{1} << v))) * dn;
        for (const auto& [r, x] : act[v]->column(b))
          col.emplace_back(static_cast<std::uint32_t>(base + r), s % 2 ? k.neg(x) : x);
      }
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
      d.set_column(tr * dm + b, std::move(col));
    }
  }
  return d;
}

template <class F>
std::size_t KoszulComplex<F>::differential_rank(int i, int j) const {
  if (i <= 0 || i > e_) return 0;
  if (strand_dim(i, j) == 0) return 0;
  if (strand_dim(i - 1, j) == 0) return 0;
  auto key = std::make_pair(i, j);
  auto it = rank_cache_.find(key);
  if (it != rank_cache_.end()) return it->second;
  std::size_t r = sparse_rank(differential(i, j));
  rank_cache_[key] = r;
  return r;
}

template <class F>
std::size_t KoszulComplex<F>::betti(int i, int j) const {
  std::size_t n = strand_dim(i, j);
  if (n == 0) return 0;
  return n - differential_rank(i, j) - differential_rank(i + 1, j);
}

template <class F>
std::vector<SparseVector<F>> KoszulComplex<F>::cycle_basis(int i, int j) const {
  return sparse_kernel(differential(i, j));
}

template <class F>
std::vector<SparseVector<F>> KoszulComplex<F>::boundary_basis(int i, int j) const {
  std::vector<Vec> out;
  if (strand_dim(i, j) == 0 || strand_dim(i + 1, j) == 0) return out;
  auto d = differential(i + 1, j);
  EchelonBasis<F> span(field(), d.rows());
  for (std::size_t c = 0; c < d.cols(); ++c)
    if (span.insert(d.column(c))) out.push_back(d.column(c));
  return out;
}

template <class F>
std::vector<SparseVector<F>> KoszulComplex<F>::homology_reps(int i, int j) const {
  std::size_t n = strand_dim(i, j);
  EchelonBasis<F> span(field(), n);
  for (const auto& b : boundary_basis(i, j)) span.insert(b);
  std::vector<Vec> out;
  for (const auto& z : cycle_basis(i, j))
    if (span.insert(z)) out.push_back(z);
  return out;
}

template <class F>
SparseVector<F> KoszulComplex<F>::multiply_variable(int v, int i, int j, const Vec& x) const {
  int deg = j - i;
  std::size_t dm = m_.dim(deg), dn = m_.dim(deg + 1);
  const auto& act = m_.action(v, deg);
  Vec out;
  std::size_t pos = 0;
  while (pos < x.size()) {
    std::size_t block = x[pos].first / dm;
    Vec part;
    while (pos < x.size() && x[pos].first / dm == block) {
      part.emplace_back(static_cast<std::uint32_t>(x[pos].first % dm), x[pos].second);
      ++pos;
    }
    for (const auto& [r, c] : act.apply(part)) out.emplace_back(static_cast<std::uint32_t>(block * dn + r), c);
  }
  return out;
}

// --- Betti tables ---------------------------------------------------------

std::size_t BettiTable::at(int i, int j) const {
  auto it = values.find({i, j});
  if (it != values.end()) return it->second;
  if (i >= 0 && i <= i_max && column_bound[i] < ExtInt(j)) return 0;
  if (j < i) return 0;
  throw TruncationError("Betti number (" + std::to_string(i) + "," + std::to_string(j) +
                        ") lies outside the computed window");
}

ExtInt BettiTable::t(int i) const {
  ExtInt best = ExtInt::neg_inf();
  for (const auto& [key, v] : values)
    if (key.first == i && v != 0) best = max(best, ExtInt(key.second));
  return best;
}

int BettiTable::observed_pd() const {
  int pd = -1;
  for (const auto& [key, v] : values)
    if (v != 0) pd = std::max(pd, key.first);
  return pd;
}

std::string BettiTable::to_tsv() const {
  std::ostringstream os;
  os << "j-i\\i";
  for (int i = 0; i <= i_max; ++i) os << '\t' << i;
  os << '\n';
  int rows = std::min(row_max, j_max);
  for (int r = 0; r <= rows; ++r) {
    os << r;
    for (int i = 0; i <= i_max; ++i) {
      int j = i + r;
      auto it = values.find({i, j});
      os << '\t';
      if (it != values.end()) os << (it->second ? std::to_string(it->second) : ".");
      else if (column_bound[i] < ExtInt(j)) os << '.';
      else os << '?';
    }
    os << '\n';
  }
  return os.str();
}

std::string BettiTable::to_json() const {
  nlohmann::ordered_json j;
  j["window"] = {{"i_max", i_max}, {"j_max", j_max}, {"row_max", row_max}};
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [key, v] : values)
    if (v != 0) entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
  j["entries"] = entries;
  auto cols = nlohmann::ordered_json::array();
  for (int i = 0; i <= i_max; ++i) cols.push_back(column_complete[i]);
  j["column_complete"] = cols;
  return j.dump();
}

template <class F>
BettiTable betti_table(const KoszulComplex<F>& k, int i_max, int j_max, int row_max,
                       const ColumnBound& bound) {
  BettiTable t;
  t.i_max = i_max;
  t.j_max = j_max;
  t.row_max = row_max;
  const auto& m = k.module();
  for (int i = 0; i <= i_max; ++i) {
    ExtInt cb = bound ? bound(i) : ExtInt::pos_inf();
    if (m.top().is_finite() || m.top().is_neg_inf()) cb = min(cb, ExtInt(i) + m.top());
    if (i > k.num_vars()) cb = ExtInt::neg_inf();
    t.column_bound.push_back(cb);
    int j_hi = std::min(j_max, i + row_max);
    bool ok = cb <= ExtInt(j_hi);
    for (int j = i + m.d_min(); j <= j_hi; ++j) {
      if (ExtInt(j) > cb) break;
      try {
        t.values[{i, j}] = k.betti(i, j);
      } catch (const TruncationError&) {
        ok = false;
      }
    }
    t.column_complete.push_back(ok);
  }
  return t;
}

TValue t_value(const BettiTable& table, int i) {
  return TValue{table.t(i), !table.complete(i)};
}

// --- subquotients ---------------------------------------------------------

template <class F>
LinearizedModule<F> submodule_linearize(const KoszulComplex<F>& k, SubmoduleKind kind, int b, int D) {
  using Vec = SparseVector<F>;
  const auto& m = k.module();
  const F& fld = k.field();
  int e = k.num_vars();
  int lo = b + m.d_min();
  LinearizedModule<F> out(fld, e, lo);
  int hi = D;
  ExtInt strand_top = ExtInt(b) + m.top();
  if (strand_top.is_neg_inf() || b < 0 || b > e) {
    out.push_first(0);
    out.set_top(ExtInt::neg_inf());
    return out;
  }
  if (strand_top.is_finite()) hi = std::min(hi, strand_top.value());

  struct Level {
    EchelonBasis<F> span;
    std::vector<Vec> basis;          // cycles or boundaries
    std::vector<std::int32_t> pos;   // cokernel: strand index -> basis index
    std::vector<std::uint32_t> free;
  };
  std::vector<Level> levels;
  for (int j = lo; j <= hi; ++j) {
    Level lv{EchelonBasis<F>(fld, 0), {}, {}, {}};
    try {
      std::size_t n = k.strand_dim(b, j);
      if (kind == SubmoduleKind::cokernel) {
        lv.span = EchelonBasis<F>(fld, n);
        for (const auto& x : k.boundary_basis(b, j)) lv.span.insert(x);
        lv.free = lv.span.free_columns();
        lv.pos.assign(n, -1);
        for (std::size_t c = 0; c < lv.free.size(); ++c) lv.pos[lv.free[c]] = static_cast<std::int32_t>(c);
      } else {
        lv.basis = kind == SubmoduleKind::cycles ? k.cycle_basis(b, j) : k.boundary_basis(b, j);
        lv.span = EchelonBasis<F>(fld, n, true);
        for (const auto& x : lv.basis) lv.span.insert(x);
      }
    } catch (const TruncationError&) {
      break;
    }
    std::size_t dim = kind == SubmoduleKind::cokernel ? lv.free.size() : lv.basis.size();
    if (levels.empty()) {
      out.push_first(dim);
    } else {
      const Level& pv = levels.back();
      std::vector<SparseMatrix<F>> acts;
      bool ok = true;
      for (int v = 0; v < e && ok; ++v) {
        std::size_t pdim = kind == SubmoduleKind::cokernel ? pv.free.size() : pv.basis.size();
        SparseMatrix<F> act(fld, dim, pdim);
        for (std::size_t c = 0; c < pdim; ++c) {
          Vec src = kind == SubmoduleKind::cokernel ? Vec{{pv.free[c], fld.one()}} : pv.basis[c];
          Vec img;
          try {
            img = k.multiply_variable(v, b, j - 1, src);
          } catch (const TruncationError&) {
            ok = false;
            break;
          }
          if (kind == SubmoduleKind::cokernel) {
            img = lv.span.reduce(img);
            for (auto& [i, x] : img) i = static_cast<std::uint32_t>(lv.pos[i]);
          } else {
            auto coords = lv.span.coordinates(img);
            if (!coords) throw std::logic_error("submodule not closed under the variable action");
            img = std::move(*coords);
          }
          act.set_column(c, std::move(img));
        }
        acts.push_back(std::move(act));
      }
      if (!ok) break;
      out.push_degree(dim, std::move(acts));
    }
    levels.push_back(std::move(lv));
  }
  if (levels.empty()) out.push_first(0);
  if (strand_top.is_finite() && out.d_max() >= strand_top.value()) out.set_top(out.observed_top());
  return out;
}

#define SYZ_INSTANTIATE_KOSZUL(F)                                                                  \
  template class KoszulComplex<F>;                                                                 \
  template BettiTable betti_table(const KoszulComplex<F>&, int, int, int, const ColumnBound&);    \
  template LinearizedModule<F> submodule_linearize(const KoszulComplex<F>&, SubmoduleKind, int, int);

SYZ_INSTANTIATE_KOSZUL(PrimeField)
SYZ_INSTANTIATE_KOSZUL(RationalField)

}  // namespace syz
