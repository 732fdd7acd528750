#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "syzygy/field.hpp"

namespace syz {

/// Raised when a computation needs graded pieces beyond what was materialized.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonHomogeneousError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generator of J has a term of degree 0 or 1.
class LinearFormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Exponents = std::vector<int>;

int degree(const Exponents& m);

/// C(n, k) as a 64-bit integer; 0 outside 0 <= k <= n. Throws on overflow.
std::uint64_t binomial(long long n, long long k);

/// Number of monomials of degree d in e variables.
std::size_t monomial_count(int e, int d);

/// All monomials of degree d in e variables, in descending lexicographic order
/// (x_1^d first, x_e^d last).
std::vector<Exponents> monomial_basis(int e, int d);

/// Position of m in monomial_basis(m.size(), degree(m)).
std::size_t monomial_rank(const Exponents& m);

/// Inverse of monomial_rank.
Exponents monomial_unrank(int e, int d, std::size_t rank);

struct Term {
  mpq_class coefficient;
  Exponents exponents;
};

/// Polynomial with rational coefficients, terms sorted in descending lex order,
/// distinct monomials and no zero coefficients. Coefficients are mapped into
/// the working field when an algebra is built.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int num_vars, std::vector<Term> terms);

  static Polynomial monomial(const Exponents& m, const mpq_class& c = 1);
  /// x_v in `num_vars` variables.
  static Polynomial variable(int num_vars, int v);

  int num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous polynomial; throws NonHomogeneousError.
  int degree() const;
  int min_degree() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const mpq_class& c) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();

  int num_vars_ = 0;
  std::vector<Term> terms_;
};

/// Default variable names x1..xe.
std::vector<std::string> default_variable_names(int e);

}  // namespace syz
