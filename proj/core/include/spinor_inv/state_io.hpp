#pragma once

/// \file
/// JSON state files: {"particles": n, "coefficients": [[re, im], ...]} in
/// the flat order of StateTensor.

#include "spinor_inv/state.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinv {

/// Malformed or schema-violating state file. line/column are 1-based and
/// zero when the problem is not tied to a text position.
class StateFormatError : public std::runtime_error {
 public:
  StateFormatError(const std::string& what, int line, int column)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

StateTensor parse_state_json(std::string_view text);

/// Reads and parses a file; unreadable files raise StateFormatError too.
StateTensor read_state_file(const std::string& path);

/// Serializes with full double precision; `name` is omitted when empty.
std::string state_to_json(const StateTensor& state, const std::string& name = {});

}  // namespace spinv
