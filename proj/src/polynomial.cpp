#include "syzygy/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace syz {

int degree(const Exponents& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::uint64_t binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::size_t monomial_count(int e, int d) {
  if (e < 0 || d < 0) return 0;
  if (e == 0) return d == 0 ? 1 : 0;
  return static_cast<std::size_t>(binomial(d + e - 1, e - 1));
}

namespace {

void fill_basis(int v, int remaining, Exponents& cur, std::vector<Exponents>& out) {
  int e = static_cast<int>(cur.size());
  if (v == e - 1) {
    cur[v] = remaining;
    out.push_back(cur);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    cur[v] = a;
    fill_basis(v + 1, remaining - a, cur, out);
  }
  cur[v] = 0;
}

}  // namespace

std::vector<Exponents> monomial_basis(int e, int d) {
  if (e < 1) throw std::invalid_argument("monomial_basis: need at least one variable");
  if (d < 0) return {};
  std::vector<Exponents> out;
  out.reserve(monomial_count(e, d));
  Exponents cur(static_cast<std::size_t>(e), 0);
  fill_basis(0, d, cur, out);
  return out;
}

std::size_t monomial_rank(const Exponents& m) {
  int e = static_cast<int>(m.size());
  int r = degree(m);
  std::size_t rank = 0;
  for (int v = 0; v + 1 < e; ++v) {
    // Monomials before m agree on x_1..x_{v-1} and have a larger exponent at v.
    if (m[v] < r) rank += monomial_count(e - v, r - m[v] - 1);
    r -= m[v];
  }
  return rank;
}

Exponents monomial_unrank(int e, int d, std::size_t rank) {
  if (rank >= monomial_count(e, d)) throw std::out_of_range("monomial_unrank: rank too large");
  Exponents m(static_cast<std::size_t>(e), 0);
  int r = d;
  for (int v = 0; v + 1 < e; ++v) {
    int a = r;
    while (true) {
      std::size_t block = monomial_count(e - v - 1, r - a);
      if (rank < block) break;
      rank -= block;
      --a;
    }
    m[v] = a;
    r -= a;
  }
  m[e - 1] = r;
  return m;
}

// --- Polynomial -----------------------------------------------------------

Polynomial::Polynomial(int num_vars, std::vector<Term> terms)
    : num_vars_(num_vars), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (static_cast<int>(t.exponents.size()) != num_vars_)
      throw std::invalid_argument("term has " + std::to_string(t.exponents.size()) +
                                  " exponents, expected " + std::to_string(num_vars_));
  normalize();
}

Polynomial Polynomial::monomial(const Exponents& m, const mpq_class& c) {
  return Polynomial(static_cast<int>(m.size()), {Term{c, m}});
}

Polynomial Polynomial::variable(int num_vars, int v) {
  Exponents m(static_cast<std::size_t>(num_vars), 0);
  m.at(static_cast<std::size_t>(v)) = 1;
  return monomial(m);
}

void Polynomial::normalize() {
  // Descending lex is ascending monomial_rank within a degree; across degrees
  // higher degree first.
  std::map<Exponents, mpq_class, std::greater<>> acc;
  for (auto& t : terms_) {
    for (int a : t.exponents)
      if (a < 0) throw std::invalid_argument("negative exponent");
    acc[t.exponents] += t.coefficient;
  }
  std::vector<Term> out;
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.push_back(Term{c, m});
  std::stable_sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    return syz::degree(a.exponents) > syz::degree(b.exponents);
  });
  terms_ = std::move(out);
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (syz::degree(t.exponents) != syz::degree(terms_.front().exponents)) return false;
  return true;
}

int Polynomial::degree() const {
  if (terms_.empty()) throw NonHomogeneousError("degree of the zero polynomial");
  if (!is_homogeneous()) throw NonHomogeneousError("polynomial " + to_string() + " is not homogeneous");
  return syz::degree(terms_.front().exponents);
}

int Polynomial::min_degree() const {
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min(d, syz::degree(t.exponents));
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (num_vars_ != other.num_vars_ && !is_zero() && !other.is_zero())
    throw std::invalid_argument("adding polynomials in different rings");
  std::vector<Term> t = terms_;
  t.insert(t.end(), other.terms_.begin(), other.terms_.end());
  return Polynomial(std::max(num_vars_, other.num_vars_), std::move(t));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + other.scaled(-1); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (num_vars_ != other.num_vars_) throw std::invalid_argument("multiplying polynomials in different rings");
  std::vector<Term> t;
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) {
      Exponents m = a.exponents;
      for (std::size_t v = 0; v < m.size(); ++v) m[v] += b.exponents[v];
      t.push_back(Term{a.coefficient * b.coefficient, std::move(m)});
    }
  return Polynomial(num_vars_, std::move(t));
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coefficient *= c;
  return Polynomial(num_vars_, std::move(t));
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto vars = names.empty() ? default_variable_names(num_vars_) : names;
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& [c, m] = terms_[k];
    mpq_class a = abs(c);
    out += sgn(c) < 0 ? (k ? " - " : "-") : (k ? " + " : "");
    std::string mono;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars[v];
      if (m[v] > 1) mono += '^' + std::to_string(m[v]);
    }
    if (mono.empty()) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + '*' + mono;
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].coefficient != b.terms_[k].coefficient ||
        a.terms_[k].exponents != b.terms_[k].exponents)
      return false;
  return true;
}

std::vector<std::string> default_variable_names(int e) {
  std::vector<std::string> out;
  for (int v = 1; v <= e; ++v) out.push_back("x" + std::to_string(v));
  return out;
}

}  // namespace syz
