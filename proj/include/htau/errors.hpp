#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace htau {

/// Machine-readable category carried by every library error.
enum class ErrorCode {
  usage,              // precondition violated by the caller
  parse,              // malformed textual input (rational, partition, list)
  singular_series,    // series inverse with zero constant term
  singular_parameter, // weight function vanishes or has a pole where needed
  singular_input,     // coincident evaluation points and similar
  scale_guard,        // brute-force oracle refused an input that is too large
  overflow,           // fixed-width integer result would not fit
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

class UsageError : public Error {
public:
  explicit UsageError(const std::string& message) : Error(ErrorCode::usage, message) {}
};

class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorCode::parse, message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class SingularError : public Error {
public:
  using Error::Error;
};

class ScaleGuardError : public Error {
public:
  explicit ScaleGuardError(const std::string& message) : Error(ErrorCode::scale_guard, message) {}
};

class OverflowError : public Error {
public:
  explicit OverflowError(const std::string& message) : Error(ErrorCode::overflow, message) {}
};

} // namespace htau
