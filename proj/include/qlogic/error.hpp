#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlogic {

/// Operands live in different ambient spaces (or lattices).
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) + " vs " +
                              std::to_string(rhs)) {}
};

/// Malformed literal or input file. `offset` is a 0-based character position when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset), detail_(what) {}

  std::size_t offset() const { return offset_; }
  /// The message without the offset suffix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

inline void require_same_dim(std::size_t lhs, std::size_t rhs) {
  if (lhs != rhs) throw DimensionMismatch(lhs, rhs);
}

}  // namespace qlogic
