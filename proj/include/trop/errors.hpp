#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trop {

// Malformed polynomial, point or divisor text. position is a 0-based offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A well-formed request outside the domain of an operation: empty variety,
// non-elliptic curve, non-transversal pair, ...
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trop
