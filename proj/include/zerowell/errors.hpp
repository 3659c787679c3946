#pragma once

#include <stdexcept>
#include <string>

namespace zerowell {

// Base for every failure the library reports. The CLI maps the subclasses
// onto exit codes, so new error kinds should derive from the closest one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a structural rule (bad well, bad spike, invalid state).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A kink where the amplitude vanishes: no finite delta strength produces it.
class UnsolvableKinkError : public ValidationError {
 public:
  UnsolvableKinkError(std::size_t knot_index, const std::string& what)
      : ValidationError(what), knot_index_(knot_index) {}
  std::size_t knot_index() const noexcept { return knot_index_; }

 private:
  std::size_t knot_index_;
};

/// Argument outside the domain of a function (e.g. eval outside the well).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exact rational result no longer fits in 64-bit components.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed or non-canonical document text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace zerowell
