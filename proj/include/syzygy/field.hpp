#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace syz {

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// Coefficient field descriptor. Characteristic 0 stands for the rationals,
/// anything else must be a prime below 2^31.
class FieldSpec {
 public:
  explicit FieldSpec(std::uint32_t characteristic = 0);

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t characteristic_;
};

/// Default prime for randomized "generic" constructions.
inline constexpr std::uint32_t kGenericPrime = 32003;

class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_rational(const mpq_class& q) const;

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  mpq_class to_rational(Element a) const { return mpq_class(static_cast<unsigned long>(a)); }
  std::string to_string(Element a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& x, const PrimeField& y) { return x.p_ == y.p_; }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec(0); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element from_int(long long v) const { return mpq_class(mpz_class(std::to_string(v))); }
  Element from_rational(const mpq_class& q) const { return q; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const;

  mpq_class to_rational(const Element& a) const { return a; }
  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Runs `fn` with the concrete field object matching `spec`.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rational()) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField{spec.characteristic()});
}

/// Parses "a", "-a" or "a/b" into a normalized rational.
mpq_class parse_rational(const std::string& text);
std::string format_rational(const mpq_class& q);

}  // namespace syz
