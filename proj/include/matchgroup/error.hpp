#pragma once

#include <stdexcept>
#include <string>

namespace matchgroup {

enum class ErrorKind {
  NotAGroup,
  SizeLimit,
  MixedGroups,
  NotInA,
  EmptyS,
  EmptyInput,
  SizeMismatch,
  IdentityInB,
  NotApplicable,
  PreconditionUnmet,
  InvalidInput,
  Parse,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::MixedGroups: return "MixedGroups";
    case ErrorKind::NotInA: return "NotInA";
    case ErrorKind::EmptyS: return "EmptyS";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::IdentityInB: return "IdentityInB";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Unknown";
}

/// Base of every error raised by the library. `kind()` is stable and is what
/// callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class NotAGroupReason { WrongIdentity, NotLatinSquare, NotAssociative };

inline const char* to_string(NotAGroupReason reason) {
  switch (reason) {
    case NotAGroupReason::WrongIdentity: return "wrong-identity";
    case NotAGroupReason::NotLatinSquare: return "not-latin-square";
    case NotAGroupReason::NotAssociative: return "not-associative";
  }
  return "unknown";
}

/// Raised by the Cayley-table validator. `triple()` holds the first violating
/// (i, j, k); for the two-index checks k repeats j.
class NotAGroupError : public Error {
 public:
  NotAGroupError(NotAGroupReason reason, std::size_t i, std::size_t j, std::size_t k)
      : Error(ErrorKind::NotAGroup, describe(reason, i, j, k)), reason_(reason), triple_{i, j, k} {}

  NotAGroupReason reason() const noexcept { return reason_; }
  const std::size_t (&triple() const noexcept)[3] { return triple_; }

 private:
  static std::string describe(NotAGroupReason reason, std::size_t i, std::size_t j, std::size_t k) {
    return std::string(to_string(reason)) + " at (" + std::to_string(i) + ", " + std::to_string(j) +
           ", " + std::to_string(k) + ")";
  }

  NotAGroupReason reason_;
  std::size_t triple_[3];
};

/// Parse failure with a 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                    ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace matchgroup
