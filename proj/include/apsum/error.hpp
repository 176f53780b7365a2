#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace apsum {

enum class ErrorCode {
  InvalidScalar,
  InvalidIndex,
  UnsupportedPower,
  DegenerateStep,
  SingularSystem,
  SizeLimit,
  PaperFormMismatch,
  TableInconsistent,
  ReferenceMismatch,
  ParseError,
  IoError,
  UsageError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidScalar: return "InvalidScalar";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::UnsupportedPower: return "UnsupportedPower";
    case ErrorCode::DegenerateStep: return "DegenerateStep";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::PaperFormMismatch: return "PaperFormMismatch";
    case ErrorCode::TableInconsistent: return "TableInconsistent";
    case ErrorCode::ReferenceMismatch: return "ReferenceMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
/// `position()` is meaningful only for ParseError (offset into the input).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::size_t position = npos)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t position() const noexcept { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  ErrorCode code_;
  std::size_t position_;
};

}  // namespace apsum
