#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace syz {

/// C(n, i) mod p by Lucas' congruence (product of digitwise binomials in base p).
std::uint32_t binom_mod(std::uint64_t n, std::uint64_t i, std::uint32_t p);

enum class GoodCase { char_zero, p_greater_n, exceptional, none };

std::string to_string(GoodCase c);

/// Whether every C(n, i), 0 <= i <= n, is nonzero in characteristic p.
/// For case `exceptional`, n + 1 = p^s * u with s >= 1 and 2 <= u <= p.
struct GoodPrimeVerdict {
  int n = 0;
  std::uint32_t p = 0;
  bool good = false;
  GoodCase kind = GoodCase::none;
  int s = 0;
  int u = 0;
};

/// p = 0 stands for characteristic zero; otherwise p must be prime.
GoodPrimeVerdict is_good(std::uint32_t p, int n);

/// Direct check of all binomial coefficients (oracle for is_good).
bool brute_is_good(std::uint32_t p, int n);

/// The unique prime p <= n that is good for n, if any.
std::optional<std::uint32_t> exceptional_prime(int n);

}  // namespace syz
