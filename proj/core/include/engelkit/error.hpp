#ifndef ENGELKIT_ERROR_HPP
#define ENGELKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace engelkit {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration grew past the configured cap. Carries the partial size
/// reached so callers can report how far the closure got.
class CapExceeded : public Error {
public:
  CapExceeded(std::size_t cap, std::size_t reached)
      : Error("enumeration cap exceeded: cap=" + std::to_string(cap) +
              ", reached at least " + std::to_string(reached) + " elements"),
        cap_(cap), reached_(reached) {}

  std::size_t cap() const { return cap_; }
  std::size_t reached() const { return reached_; }

private:
  std::size_t cap_;
  std::size_t reached_;
};

/// Cycle-notation or group-file parse failure with 1-based position.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

} // namespace engelkit

#endif
