#include <doctest.h>

#include <vector>

#include "syzygy/field.hpp"
#include "syzygy/numtheory.hpp"

using namespace syz;

namespace {

// Rows of Pascal's triangle mod p, built by addition only.
std::vector<std::vector<std::uint32_t>> pascal(std::uint32_t p, int n_max) {
  std::vector<std::vector<std::uint32_t>> rows{{1 % p}};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::uint32_t> row(n + 1);
    row[0] = row[n] = 1 % p;
    for (int i = 1; i < n; ++i) row[i] = (rows[n - 1][i - 1] + rows[n - 1][i]) % p;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("Lucas binomials agree with Pascal's triangle") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    auto rows = pascal(p, 120);
    for (int n = 0; n <= 120; ++n)
      for (int i = 0; i <= n; ++i) CHECK(binom_mod(n, i, p) == rows[n][i]);
  }
  CHECK(binom_mod(3, 5, 7) == 0);
  CHECK_THROWS(binom_mod(4, 2, 4));
}

TEST_CASE("good primes agree with the triangle for p <= 47, n <= 300") {
  for (std::uint32_t p : primes_up_to(47)) {
    auto rows = pascal(p, 300);
    for (int n = 0; n <= 300; ++n) {
      bool all_nonzero = true;
      for (auto x : rows[n]) all_nonzero = all_nonzero && x != 0;
      auto v = is_good(p, n);
      CHECK(v.good == all_nonzero);
      if (v.good && static_cast<int>(p) <= n) {
        CHECK(v.kind == GoodCase::exceptional);
        // n + 1 = p^s u with 2 <= u <= p.
        long long pw = 1;
        for (int s = 0; s < v.s; ++s) pw *= p;
        CHECK(pw * v.u == n + 1);
        CHECK(v.u >= 2);
        CHECK(v.u <= static_cast<int>(p));
      }
    }
  }
  CHECK(is_good(0, 1000).kind == GoodCase::char_zero);
  CHECK(is_good(11, 10).kind == GoodCase::p_greater_n);
}

TEST_CASE("at most one prime p <= n is good for n") {
  auto primes = primes_up_to(300);
  for (int n = 1; n <= 300; ++n) {
    int count = 0;
    std::uint32_t which = 0;
    for (auto p : primes) {
      if (static_cast<int>(p) > n) break;
      if (is_good(p, n).good) ++count, which = p;
    }
    CHECK(count <= 1);
    auto ex = exceptional_prime(n);
    CHECK(ex.has_value() == (count == 1));
    if (ex) CHECK(*ex == which);
  }
}

TEST_CASE("exceptional primes in the template bottom rows") {
  CHECK(exceptional_prime(5) == 3u);
  CHECK(exceptional_prime(7) == 2u);
  CHECK(exceptional_prime(8) == 3u);
  CHECK(exceptional_prime(9) == 5u);
  CHECK(exceptional_prime(13) == 7u);
  CHECK(exceptional_prime(14) == 5u);
  CHECK(exceptional_prime(15) == 2u);
  for (int n : {2, 4, 6, 10, 11, 12}) CHECK_FALSE(exceptional_prime(n).has_value());
}
