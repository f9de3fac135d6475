#pragma once

#include <stdexcept>
#include <string>

namespace engel {

// Bad arguments from the caller: element index out of range, operands from
// different groups, violated preconditions (e.g. quotient by a non-normal
// subgroup).
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input data that fails the group axioms or the file format.
struct validation_error : usage_error {
  using usage_error::usage_error;
};

// A construction or analysis would exceed the configured enumeration cap,
// or requires enumeration on a black-box group.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed. This signals a bug in the engine, never
// a user error.
struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

// Group-spec or Cayley-table syntax error; carries the offending position.
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position = 0;
};

}  // namespace engel
