#pragma once

#include <stdexcept>
#include <string>

namespace swh {

enum class ErrorKind {
  Validation,
  PathUnavailable,
  CutoffExhausted,
  ResourceExhausted,
  NotApplicable,
  Nonlinear,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Validation: return "validation";
    case ErrorKind::PathUnavailable: return "path_unavailable";
    case ErrorKind::CutoffExhausted: return "cutoff_exhausted";
    case ErrorKind::ResourceExhausted: return "resource_exhausted";
    case ErrorKind::NotApplicable: return "not_applicable";
    case ErrorKind::Nonlinear: return "nonlinear_dependence";
  }
  return "unknown";
}

}  // namespace swh
