#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "syzygy/field.hpp"
#include "syzygy/polynomial.hpp"

namespace syz {

/// Facts about an ideal that are known from its construction and cannot be
/// computed reliably (dimension, Cohen-Macaulayness, Koszulness, regularity).
struct IdealMetadata {
  std::string name;
  std::optional<int> dim;
  std::optional<bool> cohen_macaulay;
  std::optional<bool> koszul;
  std::optional<int> regularity;
  std::optional<std::uint64_t> seed;

  bool empty() const {
    return name.empty() && !dim && !cohen_macaulay && !koszul && !regularity && !seed;
  }
  friend bool operator==(const IdealMetadata&, const IdealMetadata&) = default;
};

/// An ideal J in k[x_1..x_e] together with its coefficient field.
struct IdealDescription {
  FieldSpec field;
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;
  IdealMetadata metadata;

  int num_vars() const { return static_cast<int>(variables.size()); }
  friend bool operator==(const IdealDescription&, const IdealDescription&) = default;
};

/// Malformed ideal document. `location` is a JSON pointer or "byte N".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(location) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// Canonical JSON text (two-space indent, trailing newline). Parsing the
/// output reproduces the description exactly.
std::string ideal_to_json(const IdealDescription& ideal);
IdealDescription ideal_from_json(const std::string& text);

IdealDescription read_ideal_file(const std::string& path);
void write_ideal_file(const std::string& path, const IdealDescription& ideal);

}  // namespace syz
