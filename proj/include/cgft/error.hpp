#pragma once

#include <stdexcept>
#include <string>

namespace cgft {

enum class ErrorKind {
  Validation,    // bad construction arguments (weights, dimensions, ...)
  Structure,     // incompatible objects (mismatched node sets, grids)
  Properness,    // function is -inf everywhere
  Lookup,        // point not found on a grid
  Magnitude,     // exponential moment overflows double range
  Convergence,   // iterative solver failed to converge
  Precondition,  // operation preconditions violated
  Support,       // measure not absolutely continuous w.r.t. the base
  Io,            // file system failures
  Parse,         // malformed JSON input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Structure: return "structure";
    case ErrorKind::Properness: return "properness";
    case ErrorKind::Lookup: return "lookup";
    case ErrorKind::Magnitude: return "magnitude";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Support: return "support";
    case ErrorKind::Io: return "io";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace cgft
