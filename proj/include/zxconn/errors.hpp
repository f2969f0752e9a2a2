#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zxconn {

// Malformed edge-list input. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A node index outside [0, node_count).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Argument outside the mathematical domain of an operation (p ∉ [0,1], n = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Dense representation would exceed the configured qubit/leg cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// No (n, m) layout satisfies the restricted-composition constraints.
class InfeasibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A projector removed the entire state: the run did not survive.
class DissipationError : public std::runtime_error {
 public:
  explicit DissipationError(std::size_t gate_index)
      : std::runtime_error("state fully dissipated at gate " + std::to_string(gate_index)),
        gate_index_(gate_index) {}
  std::size_t gate_index() const noexcept { return gate_index_; }

 private:
  std::size_t gate_index_;
};

}  // namespace zxconn
