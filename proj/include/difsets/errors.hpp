#pragma once

#include <stdexcept>
#include <string>

namespace difsets {

// Raised when a computation would exceed a configured size or work limit.
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a catalog id or file entry cannot be resolved.
class not_found_error : public std::runtime_error {
public:
  explicit not_found_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed input text; carries the 1-based line number.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

}  // namespace difsets
