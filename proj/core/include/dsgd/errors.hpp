#pragma once

#include <stdexcept>
#include <string>

namespace dsgd {

// Invalid configuration, topology precondition, or bad operation argument.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A protocol invariant was broken (gap bound, token equality, queue capacity).
// Not recoverable: it means the synchronization machinery itself is wrong.
class ProtocolViolation : public std::runtime_error {
 public:
  explicit ProtocolViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// Model parameters left the finite range during training.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// No directed path between the requested nodes.
class NoPathError : public std::runtime_error {
 public:
  explicit NoPathError(const std::string& msg) : std::runtime_error(msg) {}
};

// A reference computation (eigen solver, full-batch optimizer) failed to
// converge. Fails the surrounding test run loudly instead of returning junk.
class OracleError : public std::runtime_error {
 public:
  explicit OracleError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed trace or data file.
class TraceParseError : public std::runtime_error {
 public:
  explicit TraceParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Process exit codes used by the CLI and documented in the README.
enum class ExitCode : int {
  Ok = 0,
  Failure = 1,
  BadConfig = 2,
  Deadlock = 3,
  InvariantViolation = 4,
  Divergence = 5,
  ParseError = 6,
};

}  // namespace dsgd
