#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace symideal {

/// Arguments that violate an operation's preconditions.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// A configured resource cap (degree, pair count, level, ...) was hit.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(std::string cap, const std::string& detail)
      : std::runtime_error(cap + " exceeded: " + detail), cap_(std::move(cap)) {}

  const std::string& cap() const noexcept { return cap_; }

private:
  std::string cap_;
};

} // namespace symideal
