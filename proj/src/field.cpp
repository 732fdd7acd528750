#include "syzygy/field.hpp"

#include <cctype>

namespace syz {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && (!is_prime(characteristic) || characteristic >= (1u << 31)))
    throw std::invalid_argument("field characteristic must be 0 or a prime below 2^31, got " +
                                std::to_string(characteristic));
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("QQ") : "ZZ/" + std::to_string(characteristic_);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw std::invalid_argument("PrimeField needs a prime below 2^31, got " + std::to_string(p));
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in " + spec().to_string());
  // Extended Euclid on (a, p).
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return from_int(t);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0)
    throw std::domain_error("coefficient " + q.get_str() + " is not defined in " +
                            spec().to_string());
  Element n = from_int(num.get_si());
  Element d = from_int(den.get_si());
  return div(n, d);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero in QQ");
  return 1 / a;
}

RationalField::Element RationalField::div(const Element& a, const Element& b) const {
  if (sgn(b) == 0) throw std::domain_error("division by zero in QQ");
  return a / b;
}

mpq_class parse_rational(const std::string& text) {
  auto valid_integer = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + text + "'");
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string format_rational(const mpq_class& q) { return q.get_str(); }

}  // namespace syz
