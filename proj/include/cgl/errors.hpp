#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: group specs, catalog lines, bad family parameters.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parameters that violate a family constraint (non-prime p, m not dividing p^b - 1, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Closure enumeration found more elements than the configured cap.
class ClosureExceedsCap : public Error {
 public:
  explicit ClosureExceedsCap(std::size_t cap)
      : Error("group closure exceeds the order cap of " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A pipeline self-check failed. Signals a bug or a bad prime, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cgl
