#pragma once

#include <stdexcept>
#include <string>

namespace eulerlab {

// A zero-data fixture (directory, file, or character label) is absent or
// does not cover the requested height.
class missing_fixture_error : public std::runtime_error {
 public:
  explicit missing_fixture_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed zero-data file; message carries the 1-based line number.
class zero_parse_error : public std::runtime_error {
 public:
  zero_parse_error(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Request exceeds the in-memory materialization budget; the streaming API
// has no such limit.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace eulerlab
