#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgeideal {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input.  `position` is a zero-based byte offset into the
// offending text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Structurally invalid data (bad graph, mismatched ambient variables, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Resolution invariants of the zero ideal are undefined.
class ZeroIdealError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap was exceeded (generator cap, node budget,
// integer overflow guard in exact arithmetic).
class LimitError : public Error {
 public:
  using Error::Error;
};

// A certificate disagreed with the closed-form values it must reproduce.
class CertificateMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace edgeideal
