#pragma once

#include <stdexcept>
#include <string>

namespace ehrhart {

enum class ErrorKind {
  DegenerateInput,
  Unbounded,
  Empty,
  SingularMap,
  OriginNotInterior,
  NotLatticePolytope,
  DimensionUnsupported,
  NotFano,
  NoSpanningSelection,
  CertificationContradiction,
  PreconditionFailed,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed polytope input; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace ehrhart
