#pragma once

#include <stdexcept>
#include <string>

namespace vnum {

/// Mismatched ambient rings, malformed constraint tuples and similar shape errors.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arguments outside an operation's domain (negative powers, zero ideals where a
/// proper ideal is required, edgeless graphs, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An invariant that has no value for the given input, e.g. alpha of the zero ideal.
class UndefinedInvariantError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input class not handled by the engine (non-square-free where square-free is needed).
class UnsupportedInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap or search budget was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace vnum
