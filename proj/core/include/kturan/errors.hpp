#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kturan {

// Arguments that violate an operation's contract.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed request that exceeds a published budget; callers may retry
// with a heuristic or an external catalog.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed external data (graph6 lines, set-system text, fractions).
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t byte_offset)
      : std::runtime_error(message), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

}  // namespace kturan
