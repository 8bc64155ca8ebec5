// Error taxonomy shared by all modules. Every domain error carries a kind so
// the CLI can map it to a stable exit code, plus a human-readable message that
// names the failing invariant and, where available, a witness.
#ifndef SHORTSL2_ERRORS_HPP
#define SHORTSL2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shortsl2 {

enum class ErrorKind {
  DegenerateForm,         // bilinear form singular on the ambient space
  DegenerateRestriction,  // Gram matrix of a subspace basis is singular
  NotSymmetric,           // operator violates the sym(J1) membership invariant
  InvalidStructure,       // Lie-Jordan structure failed validation / closure
  NotBuilt,               // operation requires labels from the graded build
  NotShort,               // ad(h) eigenvalue outside {-2..2}
  NotSemisimpleElement,   // ad(h) not diagonalizable over the rationals
  NotSimple,              // algebra is not simple
  NonUnitalJ2,            // extracted Jordan algebra lacks the identity operator
  InvalidType,            // not a valid simple root-system type
  InvalidParameters,      // model/CLI parameters out of range
  WitnessNotFound,        // decision said exists but no witness materialized
  MalformedInput,         // unparseable or schema-violating input file
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::InvalidStructure: return "InvalidStructure";
    case ErrorKind::NotBuilt: return "NotBuilt";
    case ErrorKind::NotShort: return "NotShort";
    case ErrorKind::NotSemisimpleElement: return "NotSemisimpleElement";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NonUnitalJ2: return "NonUnitalJ2";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::WitnessNotFound: return "WitnessNotFound";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace shortsl2

#endif  // SHORTSL2_ERRORS_HPP
