#pragma once

#include <stdexcept>
#include <string>

namespace hypersum {

/// Machine-readable error categories surfaced by the CLI.
enum class ErrorCode { Parse, Incompatible, NoTelescoper, OrderCap, Internal, Math };

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::Incompatible: return "INCOMPATIBLE";
    case ErrorCode::NoTelescoper: return "NO_TELESCOPER";
    case ErrorCode::OrderCap: return "ORDER_CAP";
    case ErrorCode::Math: return "MATH";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "INTERNAL";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Violated mathematical precondition (division by zero, non-coprime factors, ...).
class MathError : public Error {
 public:
  explicit MathError(const std::string& what) : Error(ErrorCode::Math, what) {}
};

}  // namespace hypersum
