#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace syz {

/// Integer extended by -inf and +inf. Degrees of zero graded spaces are -inf
/// (top(0) = -inf); +inf marks an unbounded or unmaterialized top degree.
class ExtInt {
 public:
  constexpr ExtInt() : v_(kNeg) {}
  constexpr ExtInt(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtInt neg_inf() { return ExtInt(Tag{}, kNeg); }
  static constexpr ExtInt pos_inf() { return ExtInt(Tag{}, kPos); }

  constexpr bool is_finite() const { return v_ != kNeg && v_ != kPos; }
  constexpr bool is_neg_inf() const { return v_ == kNeg; }
  constexpr bool is_pos_inf() const { return v_ == kPos; }

  int value() const {
    if (!is_finite()) throw std::logic_error("ExtInt::value on infinite " + to_string());
    return static_cast<int>(v_);
  }

  std::string to_string() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "inf";
    return std::to_string(v_);
  }

  /// -inf absorbs everything; this matches top(A (x) B) = top(A) + top(B).
  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
    return ExtInt(Tag{}, a.v_ + b.v_);
  }
  friend constexpr ExtInt operator-(ExtInt a, int b) { return a + ExtInt(-b); }

  friend constexpr auto operator<=>(const ExtInt&, const ExtInt&) = default;
  friend constexpr bool operator==(const ExtInt&, const ExtInt&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ExtInt& x) { return os << x.to_string(); }

 private:
  struct Tag {};
  static constexpr std::int64_t kNeg = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t kPos = std::numeric_limits<std::int64_t>::max();
  constexpr ExtInt(Tag, std::int64_t v) : v_(v) {}

  std::int64_t v_;
};

inline constexpr ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }
inline constexpr ExtInt min(ExtInt a, ExtInt b) { return a < b ? a : b; }

}  // namespace syz
