#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

enum class ErrorKind {
  TraceViolation,
  AsymmetryViolation,
  ZeroVector,
  UnnormalizedDyad,
  ConstraintViolation,
  DegeneracyViolation,
  InconsistentPattern,
  NoAnnihilation,
  UnknownSymbol,
  BadInput,
  Internal,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::TraceViolation: return "TraceViolation";
    case ErrorKind::AsymmetryViolation: return "AsymmetryViolation";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::UnnormalizedDyad: return "UnnormalizedDyad";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::DegeneracyViolation: return "DegeneracyViolation";
    case ErrorKind::InconsistentPattern: return "InconsistentPattern";
    case ErrorKind::NoAnnihilation: return "NoAnnihilation";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class ClassifyError : public std::runtime_error {
 public:
  ClassifyError(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ricci
