#include "syzygy/numtheory.hpp"

#include <stdexcept>
#include <vector>

#include "syzygy/field.hpp"

namespace syz {

namespace {

// C(a, b) mod p for 0 <= a, b < p via multiplicative formula.
std::uint32_t small_binom(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  if (b > a) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint32_t k = 0; k < b; ++k) {
    num = num * ((a - k) % p) % p;
    den = den * ((k + 1) % p) % p;
  }
  // den is a product of factors below p, hence invertible.
  std::uint64_t inv = 1, base = den, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(num * inv % p);
}

}  // namespace

std::uint32_t binom_mod(std::uint64_t n, std::uint64_t i, std::uint32_t p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("binom_mod: p must be prime");
  if (i > n) return 0;
  std::uint64_t r = 1;
  while (n || i) {
    r = r * small_binom(static_cast<std::uint32_t>(n % p), static_cast<std::uint32_t>(i % p), p) % p;
    if (r == 0) return 0;
    n /= p;
    i /= p;
  }
  return static_cast<std::uint32_t>(r);
}

std::string to_string(GoodCase c) {
  switch (c) {
    case GoodCase::char_zero: return "char-zero";
    case GoodCase::p_greater_n: return "p-greater-n";
    case GoodCase::exceptional: return "exceptional";
    case GoodCase::none: return "none";
  }
  return "none";
}

GoodPrimeVerdict is_good(std::uint32_t p, int n) {
  if (n < 0) throw std::invalid_argument("is_good: n must be non-negative");
  if (p != 0 && !is_prime(p)) throw std::invalid_argument("is_good: p must be 0 or prime");
  GoodPrimeVerdict v{n, p, true, GoodCase::char_zero, 0, 0};
  if (p == 0) return v;
  if (static_cast<std::uint64_t>(p) > static_cast<std::uint64_t>(n)) {
    v.kind = GoodCase::p_greater_n;
    return v;
  }
  std::uint64_t m = static_cast<std::uint64_t>(n) + 1;
  int s = 0;
  while (m > p && m % p == 0) {
    m /= p;
    ++s;
  }
  if (s >= 1 && m >= 2 && m <= p) {
    v.kind = GoodCase::exceptional;
    v.s = s;
    v.u = static_cast<int>(m);
    return v;
  }
  v.good = false;
  v.kind = GoodCase::none;
  return v;
}

bool brute_is_good(std::uint32_t p, int n) {
  if (p == 0) return true;
  // Pascal's triangle mod p, row by row.
  std::vector<std::uint32_t> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<std::uint32_t> next(static_cast<std::size_t>(r) + 1, 1);
    for (int k = 1; k < r; ++k) next[k] = (row[k - 1] + row[k]) % p;
    row = std::move(next);
  }
  for (auto c : row)
    if (c == 0) return false;
  return true;
}

std::optional<std::uint32_t> exceptional_prime(int n) {
  for (int p = 2; p <= n; ++p)
    if (is_prime(static_cast<std::uint64_t>(p)) && is_good(static_cast<std::uint32_t>(p), n).good)
      return static_cast<std::uint32_t>(p);
  return std::nullopt;
}

}  // namespace syz
