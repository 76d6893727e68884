#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmfp {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad caller input: carrier mismatch, out-of-range index, empty sample, ...
class InputError : public Error {
 public:
  using Error::Error;
};

// A tabulated matrix failed the exhaustive axiom check at construction.
class AxiomViolationError : public Error {
 public:
  using Error::Error;
};

// Contraction constants violate the mode's validity constraint.
class SpecInvalidError : public Error {
 public:
  using Error::Error;
};

// A coupled map produced a value outside the space's carrier.
class DomainEscapeError : public Error {
 public:
  using Error::Error;
};

// A distance or iterate came out non-finite.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

// Expression syntax error; offset is a 0-based byte position into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Expression evaluation error (division by zero, non-finite result).
class EvalError : public Error {
 public:
  using Error::Error;
};

// Problem-config parse or validation failure.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Filesystem trouble (missing matrix file, unwritable report path, ...).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pmfp
