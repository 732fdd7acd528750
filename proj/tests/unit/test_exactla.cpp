#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "syzygy/extint.hpp"
#include "syzygy/field.hpp"
#include "syzygy/matrix.hpp"
#include "syzygy/sparse.hpp"

using namespace syz;

namespace {

// Leibniz determinant over Q, for the minor oracle below.
mpq_class leibniz(const std::vector<std::vector<mpq_class>>& m) {
  std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class det = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    mpq_class term = inversions % 2 ? -1 : 1;
    for (std::size_t r = 0; r < n; ++r) term *= m[r][perm[r]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Rank as the largest k with a nonzero k x k minor.
std::size_t minor_rank(const std::vector<std::vector<long long>>& a) {
  std::size_t rows = a.size(), cols = a[0].size();
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<bool> rsel(rows), csel(cols);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        std::vector<std::vector<mpq_class>> sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          sub.emplace_back();
          for (std::size_t c = 0; c < cols; ++c)
            if (csel[c]) sub.back().emplace_back(static_cast<long>(a[r][c]));
        }
        if (leibniz(sub) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

// Rank over F_p as log_p of the number of distinct vectors in the row span.
std::size_t span_rank(std::uint32_t p, const std::vector<std::vector<long long>>& a) {
  std::size_t rows = a.size(), cols = a[0].size();
  std::set<std::vector<long long>> span;
  std::vector<long long> coeff(rows, 0);
  while (true) {
    std::vector<long long> v(cols, 0);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) v[c] = ((v[c] + coeff[r] * a[r][c]) % p + p) % p;
    span.insert(v);
    std::size_t r = 0;
    while (r < rows && ++coeff[r] == static_cast<long long>(p)) coeff[r++] = 0;
    if (r == rows) break;
  }
  std::size_t rank = 0, size = 1;
  while (size < span.size()) size *= p, ++rank;
  return rank;
}

std::vector<std::vector<long long>> random_ints(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  return a;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(0) == 0);
  CHECK(f.from_int(-1) == 6);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.from_rational(mpq_class(1, 2)) == 4);
  CHECK_THROWS(f.inv(0));
  CHECK_THROWS(PrimeField(8));
}

TEST_CASE("rationals parse and print exactly") {
  CHECK(parse_rational("-6/4") == mpq_class(-3, 2));
  CHECK(format_rational(mpq_class(-3, 2)) == "-3/2");
  CHECK(format_rational(mpq_class(4)) == "4");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  RationalField q;
  CHECK(q.inv(mpq_class(2, 3)) == mpq_class(3, 2));
}

TEST_CASE("field specs") {
  CHECK(FieldSpec(0).is_rational());
  CHECK(FieldSpec(32003).characteristic() == 32003);
  CHECK_THROWS(FieldSpec(9));
  CHECK(visit_field(FieldSpec(5), [](auto k) { return k.characteristic(); }) == 5u);
}

TEST_CASE("extended integers") {
  ExtInt a(3), n = ExtInt::neg_inf(), p = ExtInt::pos_inf();
  CHECK(a + n == n);
  CHECK(n + p == n);
  CHECK(a + p == p);
  CHECK(n < a);
  CHECK(a < p);
  CHECK(max(n, a) == a);
  CHECK(min(p, a) == a);
  CHECK_THROWS(n.value());
  CHECK(n.to_string() == "-inf");
}

TEST_CASE("dense rank agrees with the minor oracle over Q") {
  std::mt19937_64 rng(11);
  RationalField q;
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    auto a = random_ints(rng, rows, cols, -2, 2);
    if (trial % 5 == 0 && rows > 1) a[rows - 1] = a[0];  // force dependence
    auto m = Matrix<RationalField>::from_ints(q, a);
    CHECK(rank(m) == minor_rank(a));
    auto sparse = SparseMatrix<RationalField>::from_dense(m);
    CHECK(sparse_rank(sparse) == minor_rank(a));
  }
}

TEST_CASE("rank over small primes agrees with span enumeration") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 30; ++trial) {
      int rows = 1 + trial % 4, cols = 1 + (trial / 3) % 5;
      auto a = random_ints(rng, rows, cols, 0, static_cast<int>(p) - 1);
      auto m = Matrix<PrimeField>::from_ints(f, a);
      CHECK(rank(m) == span_rank(p, a));
      CHECK(sparse_rank(SparseMatrix<PrimeField>::from_dense(m)) == span_rank(p, a));
    }
  }
}

TEST_CASE("sparse kernel is a basis of the null space") {
  std::mt19937_64 rng(3);
  PrimeField f(101);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_ints(rng, 3, 6, 0, 3);
    auto m = SparseMatrix<PrimeField>::from_dense(Matrix<PrimeField>::from_ints(f, a));
    auto ker = sparse_kernel(m);
    CHECK(ker.size() == 6 - sparse_rank(m));
    EchelonBasis<PrimeField> eb(f, 6);
    for (const auto& v : ker) {
      CHECK(m.apply(v).empty());
      CHECK(eb.insert(v));
    }
  }
}

TEST_CASE("echelon basis pivots do not depend on insertion order") {
  PrimeField f(7);
  std::vector<SparseVector<PrimeField>> vs = {
      {{0, 1}, {2, 3}}, {{1, 2}, {2, 1}}, {{0, 2}, {1, 2}}, {{3, 5}}};
  EchelonBasis<PrimeField> a(f, 4), b(f, 4);
  for (const auto& v : vs) a.insert(v);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) b.insert(*it);
  CHECK(a.pivot_columns() == b.pivot_columns());
  CHECK(a.reduced_rows() == b.reduced_rows());
  CHECK(a.free_columns().size() == 4 - a.rank());
}

TEST_CASE("tracked coordinates reproduce the vector") {
  RationalField q;
  EchelonBasis<RationalField> eb(q, 3, true);
  SparseVector<RationalField> u = {{0, mpq_class(1)}, {1, mpq_class(2)}};
  SparseVector<RationalField> w = {{1, mpq_class(1)}, {2, mpq_class(-1)}};
  REQUIRE(eb.insert(u));
  REQUIRE(eb.insert(w));
  CHECK_FALSE(eb.insert(axpy(q, u, mpq_class(3), w)));
  auto target = axpy(q, scale(q, u, mpq_class(1, 2)), mpq_class(-4), w);
  auto c = eb.coordinates(target);
  REQUIRE(c);
  SparseVector<RationalField> rebuilt;
  for (auto [g, x] : *c) rebuilt = axpy(q, rebuilt, x, g == 0 ? u : w);
  CHECK(rebuilt == target);
  SparseVector<RationalField> outside = {{0, mpq_class(5)}, {2, mpq_class(1)}};
  CHECK_FALSE(eb.coordinates(outside).has_value());
  CHECK_FALSE(eb.contains(outside));
}

TEST_CASE("dense kernel and solve") {
  RationalField q;
  auto m = Matrix<RationalField>::from_ints(q, {{1, 2, 3}, {2, 4, 6}});
  auto k = kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK(m.multiply(k).is_zero());
  auto b = Matrix<RationalField>::from_ints(q, {{2}, {4}});
  auto x = solve(m, b);
  REQUIRE(x);
  CHECK(m.multiply(*x).column(0) == b.column(0));
  CHECK_FALSE(solve(m, Matrix<RationalField>::from_ints(q, {{1}, {0}})).has_value());
}
