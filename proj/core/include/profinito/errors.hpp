#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace profinito {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed presentation or word text. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string const& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured size cap (group order, index, generator count, ...) was hit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Coset enumeration ran out of room. This says nothing about whether the
/// index is infinite.
class CapacityExceeded : public LimitExceeded {
 public:
  CapacityExceeded(std::size_t cosets_used, std::size_t max_cosets)
      : LimitExceeded("coset enumeration exceeded capacity: " + std::to_string(cosets_used) +
                      " cosets defined, limit " + std::to_string(max_cosets) +
                      " (index unknown)"),
        cosets_used_(cosets_used) {}

  [[nodiscard]] std::size_t cosets_used() const noexcept { return cosets_used_; }

 private:
  std::size_t cosets_used_;
};

/// An exact integer result does not fit the fixed-width type it is reported in.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace profinito
