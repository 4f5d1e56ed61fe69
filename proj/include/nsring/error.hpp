#ifndef NSRING_ERROR_HPP
#define NSRING_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsring {

/// Integer type used for every value, index offset and length in the library.
using Value = std::int64_t;

enum class ErrorCode {
  EmptyInput,
  InvalidArgument,
  GcdNotOne,
  NotAnElement,
  ParentMismatch,
  NotIntegral,
  NotProper,
  NotNested,
  InvalidIdeal,
  Regular,
  NotEdim3,
  Symmetric,
  AmbiguousPresentation,
  Parse,
};

inline const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::NotAnElement: return "NotAnElement";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::InvalidIdeal: return "InvalidIdeal";
    case ErrorCode::Regular: return "Regular";
    case ErrorCode::NotEdim3: return "NotEdim3";
    case ErrorCode::Symmetric: return "Symmetric";
    case ErrorCode::AmbiguousPresentation: return "AmbiguousPresentation";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Domain error; `code()` identifies the violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nsring

#endif
