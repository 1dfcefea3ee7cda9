#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rlat {

/// Process exit codes used by the command line tool.
enum class ExitCode : int {
  ok = 0,
  validation_failure = 1,
  parse_error = 2,
  internal_inconsistency = 3,
  cap_exceeded = 4,
};

/// Base of every error raised by the library. Each error knows the exit
/// code the CLI reports for it.
class Error : public std::runtime_error {
public:
  Error(const std::string& what, ExitCode code) : std::runtime_error(what), code_(code) {}
  ExitCode exit_code() const { return code_; }

private:
  ExitCode code_;
};

class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what, ExitCode::validation_failure) {}
};

class TableOutOfRange : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NotResiduated : public ValidationError {
public:
  NotResiduated(std::size_t x, std::size_t y, const std::string& what)
      : ValidationError(what), x(x), y(y) {}
  std::size_t x, y;
};

class ArrowMismatch : public ValidationError {
public:
  ArrowMismatch(std::size_t x, std::size_t y, const std::string& what)
      : ValidationError(what), x(x), y(y) {}
  std::size_t x, y;
};

/// Precondition violations of the spectrum operations (NotProper, NotPrime,
/// Overlap, BaseNotContained, MultipleMaximal, NotPm, NotPrimeCollection).
/// They map to the validation exit code: the input did not satisfy what the
/// operation needs.
class PreconditionError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason, ExitCode::parse_error), line(line) {}
  std::size_t line;
};

class CapExceeded : public Error {
public:
  explicit CapExceeded(const std::string& what) : Error(what, ExitCode::cap_exceeded) {}
};

/// A computed value disagrees with a characterization that must hold on
/// every residuated lattice.
class InternalInconsistency : public Error {
public:
  explicit InternalInconsistency(const std::string& what)
      : Error(what, ExitCode::internal_inconsistency) {}
};

}  // namespace rlat
