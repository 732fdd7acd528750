#include "syzygy/algebra.hpp"

#include <algorithm>
#include <map>

namespace syz {

template <class F>
QuotientAlgebra<F>::QuotientAlgebra(F field, int num_vars, std::vector<Polynomial> generators)
    : field_(std::move(field)), e_(num_vars), generators_(std::move(generators)) {
  if (e_ < 1) throw std::invalid_argument("QuotientAlgebra needs at least one variable");
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const Polynomial& f = generators_[g];
    if (f.is_zero()) continue;
    if (f.num_vars() != e_)
      throw std::invalid_argument("generator " + std::to_string(g) + " lives in " +
                                  std::to_string(f.num_vars()) + " variables, expected " +
                                  std::to_string(e_));
    if (!f.is_homogeneous())
      throw NonHomogeneousError("generator " + std::to_string(g) + " is not homogeneous: " +
                                f.to_string());
    int d = f.degree();
    if (d < 2)
      throw LinearFormError("generator " + std::to_string(g) + " has degree " + std::to_string(d) +
                            "; J must not contain linear forms or units (" + f.to_string() + ")");
    auto v = to_s_coordinates(f);
    if (v.empty()) continue;  // vanishes in this characteristic
    if (static_cast<int>(gens_by_degree_.size()) <= d) gens_by_degree_.resize(d + 1);
    gens_by_degree_[d].push_back(std::move(v));
    max_gen_degree_ = std::max(max_gen_degree_, d);
  }
}

template <class F>
bool QuotientAlgebra<F>::is_monomial_ideal() const {
  for (const auto& g : generators_)
    if (g.terms().size() > 1) return false;
  return true;
}

template <class F>
SparseVector<F> QuotientAlgebra<F>::to_s_coordinates(const Polynomial& f) const {
  Vec out;
  for (const auto& t : f.terms()) {
    auto c = field_.from_rational(t.coefficient);
    if (!field_.is_zero(c)) out.emplace_back(static_cast<std::uint32_t>(monomial_rank(t.exponents)), c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

template <class F>
void QuotientAlgebra<F>::build_next() const {
  int d = static_cast<int>(pieces_.size());
  std::size_t n = monomial_count(e_, d);
  auto p = std::make_unique<Piece>(Piece{EchelonBasis<F>(field_, n), {}, {}, {}, {}});
  if (d > 0) {
    Piece& prev = *pieces_[d - 1];
    std::size_t m = monomial_count(e_, d - 1);
    if (prev.up.empty()) {
      prev.up.resize(static_cast<std::size_t>(e_) * m);
      auto basis = monomial_basis(e_, d - 1);
      for (std::size_t r = 0; r < m; ++r)
        for (int v = 0; v < e_; ++v) {
          ++basis[r][v];
          prev.up[v * m + r] = static_cast<std::uint32_t>(monomial_rank(basis[r]));
          --basis[r][v];
        }
    }
    for (const auto& row : prev.ideal.rows())
      for (int v = 0; v < e_; ++v) {
        Vec shifted;
        shifted.reserve(row.size());
        for (const auto& [r, x] : row) shifted.emplace_back(prev.up[v * m + r], x);
        std::sort(shifted.begin(), shifted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        p->ideal.insert(shifted);
      }
  }
  if (d < static_cast<int>(gens_by_degree_.size()))
    for (const auto& g : gens_by_degree_[d]) p->ideal.insert(g);
  p->standard = p->ideal.free_columns();
  p->position.assign(n, -1);
  for (std::size_t k = 0; k < p->standard.size(); ++k)
    p->position[p->standard[k]] = static_cast<std::int32_t>(k);
  p->action.resize(static_cast<std::size_t>(e_));
  pieces_.push_back(std::move(p));
}

template <class F>
typename QuotientAlgebra<F>::Piece& QuotientAlgebra<F>::piece(int d) const {
  if (d < 0) throw std::out_of_range("negative degree");
  while (static_cast<int>(pieces_.size()) <= d) build_next();
  return *pieces_[d];
}

template <class F>
void QuotientAlgebra<F>::precompute(int D) const {
  piece(D + 1);
  for (int d = 0; d < D; ++d)
    for (int v = 0; v < e_; ++v) action_matrix(v, d);
}

template <class F>
const EchelonBasis<F>& QuotientAlgebra<F>::ideal_piece(int d) const {
  return piece(d).ideal;
}

template <class F>
Matrix<F> QuotientAlgebra<F>::ideal_piece_matrix(int d) const {
  auto rows = piece(d).ideal.reduced_rows();
  Matrix<F> m(field_, rows.size(), monomial_count(e_, d));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, x] : rows[r]) m(r, c) = x;
  return m;
}

template <class F>
std::size_t QuotientAlgebra<F>::ideal_dim(int d) const {
  if (d < 0) return 0;
  return piece(d).ideal.rank();
}

template <class F>
const std::vector<std::uint32_t>& QuotientAlgebra<F>::standard_monomials(int d) const {
  return piece(d).standard;
}

template <class F>
std::vector<Exponents> QuotientAlgebra<F>::algebra_basis(int d) const {
  std::vector<Exponents> out;
  for (auto r : standard_monomials(d)) out.push_back(monomial_unrank(e_, d, r));
  return out;
}

template <class F>
std::size_t QuotientAlgebra<F>::dim(int d) const {
  if (d < 0) return 0;
  return piece(d).standard.size();
}

template <class F>
std::vector<std::size_t> QuotientAlgebra<F>::hilbert_function(int D) const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= D; ++d) out.push_back(dim(d));
  return out;
}

template <class F>
std::uint32_t QuotientAlgebra<F>::shift(int v, int d, std::uint32_t rank) const {
  piece(d + 1);
  Piece& p = *pieces_[d];
  std::size_t m = monomial_count(e_, d);
  return p.up[static_cast<std::size_t>(v) * m + rank];
}

template <class F>
SparseVector<F> QuotientAlgebra<F>::normal_form(int d, const Vec& s) const {
  if (d < 0) return {};
  Piece& p = piece(d);
  Vec rem = p.ideal.reduce(s);
  for (auto& [idx, x] : rem) idx = static_cast<std::uint32_t>(p.position[idx]);
  return rem;
}

template <class F>
SparseVector<F> QuotientAlgebra<F>::normal_form(const Polynomial& f) const {
  if (f.is_zero()) return {};
  if (f.num_vars() != e_) throw std::invalid_argument("normal_form: wrong number of variables");
  int d = f.degree();
  return normal_form(d, to_s_coordinates(f));
}

template <class F>
Polynomial QuotientAlgebra<F>::to_polynomial(int d, const Vec& r) const {
  const auto& st = standard_monomials(d);
  std::vector<Term> terms;
  for (const auto& [k, x] : r) terms.push_back(Term{field_.to_rational(x), monomial_unrank(e_, d, st.at(k))});
  return Polynomial(e_, std::move(terms));
}

template <class F>
const SparseMatrix<F>& QuotientAlgebra<F>::action_matrix(int v, int d) const {
  if (v < 0 || v >= e_) throw std::out_of_range("action_matrix: variable index");
  piece(d + 1);
  Piece& p = *pieces_[d];
  auto& slot = p.action[static_cast<std::size_t>(v)];
  if (!slot) {
    auto m = std::make_unique<SparseMatrix<F>>(field_, dim(d + 1), dim(d));
    for (std::size_t k = 0; k < p.standard.size(); ++k) {
      Vec unit{{shift(v, d, p.standard[k]), field_.one()}};
      m->set_column(k, normal_form(d + 1, unit));
    }
    slot = std::move(m);
  }
  return *slot;
}

template <class F>
SparseVector<F> QuotientAlgebra<F>::multiply_monomial(const Exponents& mu, int d, const Vec& r) const {
  Vec cur = r;
  int deg = d;
  for (int v = 0; v < e_; ++v)
    for (int k = 0; k < mu.at(static_cast<std::size_t>(v)); ++k) cur = action_matrix(v, deg++).apply(cur);
  return cur;
}

// --- linear elimination ---------------------------------------------------

template <class F>
LinearElimination eliminate_linear_forms(const F& field, int num_vars,
                                         const std::vector<Polynomial>& generators) {
  std::vector<Polynomial> linear, rest;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw NonHomogeneousError("generator " + g.to_string() + " is not homogeneous");
    int d = g.degree();
    if (d == 0) throw LinearFormError("generating set contains a unit; the quotient is zero");
    (d == 1 ? linear : rest).push_back(g);
  }
  Matrix<F> coeffs(field, linear.size(), static_cast<std::size_t>(num_vars));
  for (std::size_t r = 0; r < linear.size(); ++r)
    for (const auto& t : linear[r].terms()) {
      std::size_t v = std::find(t.exponents.begin(), t.exponents.end(), 1) - t.exponents.begin();
      coeffs(r, v) = field.from_rational(t.coefficient);
    }
  auto red = rref(coeffs);
  std::vector<bool> eliminated(static_cast<std::size_t>(num_vars), false);
  for (auto p : red.pivots) eliminated[p] = true;

  // Substitution x_p -> -sum_{c free} red(i, c) x_c for the pivot variable of row i.
  std::vector<Polynomial> image(static_cast<std::size_t>(num_vars));
  for (int v = 0; v < num_vars; ++v) image[v] = Polynomial::variable(num_vars, v);
  for (std::size_t i = 0; i < red.rank; ++i) {
    std::vector<Term> terms;
    for (int c = 0; c < num_vars; ++c) {
      if (eliminated[c] || field.is_zero(red.reduced(i, c))) continue;
      Exponents m(static_cast<std::size_t>(num_vars), 0);
      m[c] = 1;
      terms.push_back(Term{field.to_rational(field.neg(red.reduced(i, c))), m});
    }
    image[red.pivots[i]] = Polynomial(num_vars, std::move(terms));
  }

  LinearElimination out;
  for (int v = 0; v < num_vars; ++v)
    if (!eliminated[v]) out.kept_variables.push_back(v);
  out.num_vars = static_cast<int>(out.kept_variables.size());
  for (const auto& g : rest) {
    Polynomial acc;
    for (const auto& t : g.terms()) {
      Exponents one(static_cast<std::size_t>(num_vars), 0);
      Polynomial prod = Polynomial::monomial(one, t.coefficient);
      for (int v = 0; v < num_vars; ++v)
        for (int k = 0; k < t.exponents[v]; ++k) prod = prod * image[v];
      acc = acc.is_zero() ? prod : acc + prod;
    }
    std::vector<Term> terms;
    for (const auto& t : acc.terms()) {
      auto c = field.from_rational(t.coefficient);
      if (field.is_zero(c)) continue;
      Exponents m;
      for (int v : out.kept_variables) m.push_back(t.exponents[v]);
      terms.push_back(Term{field.to_rational(c), std::move(m)});
    }
    Polynomial reduced(out.num_vars, std::move(terms));
    if (!reduced.is_zero()) out.generators.push_back(std::move(reduced));
  }
  return out;
}

// --- Krull dimension ------------------------------------------------------

namespace {

int vanishing_order(std::vector<long long> w) {
  for (int k = 0;; ++k) {
    if (std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; })) return k;
    if (w.size() <= 1) return -1;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) w[i] = w[i + 1] - w[i];
    w.pop_back();
  }
}

}  // namespace

KrullEstimate krull_dim_estimate(const std::vector<std::size_t>& hf, int e) {
  std::size_t len = static_cast<std::size_t>(e) + 2;
  auto window = [&](std::size_t end) {
    std::size_t start = end >= len ? end - len : 0;
    return std::vector<long long>(hf.begin() + static_cast<std::ptrdiff_t>(start),
                                  hf.begin() + static_cast<std::ptrdiff_t>(end));
  };
  int k = vanishing_order(window(hf.size()));
  KrullEstimate out;
  out.dim = k < 0 ? e : k;
  if (hf.size() >= len + 1) {
    int earlier = vanishing_order(window(hf.size() - 1));
    out.stable = k >= 0 && earlier == k;
  }
  return out;
}

// --- initial ideal ----------------------------------------------------------

int InitialIdeal::lcm_degree() const {
  if (generators.empty()) return 0;
  Exponents l(generators.front().size(), 0);
  for (const auto& g : generators)
    for (std::size_t v = 0; v < l.size(); ++v) l[v] = std::max(l[v], g[v]);
  return degree(l);
}

template <class F>
InitialIdeal initial_ideal(const QuotientAlgebra<F>& a, int degree_cap) {
  InitialIdeal out;
  int e = a.num_vars();
  out.gb_degree = a.max_generator_degree();
  for (int d = 1;; ++d) {
    if (d > 2 * out.gb_degree) {
      out.certified = true;
      return out;
    }
    if (d > degree_cap) return out;
    const auto& cur = a.ideal_piece(d);
    for (auto r : cur.pivot_columns()) {
      Exponents m = monomial_unrank(e, d, r);
      bool minimal = true;
      for (int v = 0; v < e && minimal; ++v) {
        if (m[v] == 0) continue;
        --m[v];
        if (a.ideal_piece(d - 1).is_pivot(static_cast<std::uint32_t>(monomial_rank(m)))) minimal = false;
        ++m[v];
      }
      if (minimal) {
        out.generators.push_back(m);
        out.gb_degree = std::max(out.gb_degree, d);
      }
    }
    out.checked_through = d;
  }
}

template class QuotientAlgebra<PrimeField>;
template class QuotientAlgebra<RationalField>;
template InitialIdeal initial_ideal(const QuotientAlgebra<PrimeField>&, int);
template InitialIdeal initial_ideal(const QuotientAlgebra<RationalField>&, int);
template LinearElimination eliminate_linear_forms(const PrimeField&, int, const std::vector<Polynomial>&);
template LinearElimination eliminate_linear_forms(const RationalField&, int,
                                                  const std::vector<Polynomial>&);

}  // namespace syz
