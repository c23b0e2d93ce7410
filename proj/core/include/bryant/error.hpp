#pragma once

#include <stdexcept>
#include <string>

namespace bryant {

/// Failure categories surfaced by the library.  Every throwing operation
/// documents which of these it can raise; the CLI maps them to exit codes.
enum class ErrorKind {
  NotHermitian,         // hermiticity defect above tolerance
  NotOnHyperboloid,     // point too far from the unit hyperboloid
  SingularMatrix,       // 2x2 inverse requested with |det| below threshold
  GammaPole,            // gamma evaluated at (or too close to) a pole
  DegenerateC,          // hypergeometric series with c at a nonpositive integer
  SeriesDiverged,       // power series failed to converge
  ResonantParameters,   // exponent differences integral; transformation breaks down
  DegenerateData,       // spinor data fails a nondegeneracy requirement
  OracleMismatch,       // closed form and independent integration disagree
  StepUnderflow,        // adaptive integrator step size collapsed
  MismatchedExponents,  // two routes to an end exponent disagree
  InconsistentCriteria, // two unitarizability criteria disagree
  NotUnitarizable,      // monodromy group admits no unitarizer
  GaussMapPole,         // hyperbolic Gauss map evaluated at a pole of Q/P data
  HalfIntegerLambda,    // twonoid exponent half-integral without explicit dressing
  NotRepresentable,     // value outside the representable contract (mesh/export)
  DegenerateStencil,    // finite-difference stencil collapsed or left the domain
};

const char* to_string(ErrorKind kind);

/// Library-wide exception: an ErrorKind plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotOnHyperboloid: return "NotOnHyperboloid";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::GammaPole: return "GammaPole";
    case ErrorKind::DegenerateC: return "DegenerateC";
    case ErrorKind::SeriesDiverged: return "SeriesDiverged";
    case ErrorKind::ResonantParameters: return "ResonantParameters";
    case ErrorKind::DegenerateData: return "DegenerateData";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::MismatchedExponents: return "MismatchedExponents";
    case ErrorKind::InconsistentCriteria: return "InconsistentCriteria";
    case ErrorKind::NotUnitarizable: return "NotUnitarizable";
    case ErrorKind::GaussMapPole: return "GaussMapPole";
    case ErrorKind::HalfIntegerLambda: return "HalfIntegerLambda";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::DegenerateStencil: return "DegenerateStencil";
  }
  return "UnknownError";
}

}  // namespace bryant
