#ifndef AXIAL_ERROR_HPP
#define AXIAL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace axial {

/// Failure categories raised by the library. Verdict-style checks never throw;
/// these are reserved for violated preconditions and numerical breakdowns.
enum class ErrorCode {
  symmetry_violation,
  not_hermitian,
  too_many_factors,
  divergent_point,
  not_intrinsic,
  singular_constant_term,
  shape_mismatch,
  division_by_t,
  non_contractive_iterate,
  non_decaying_state,
  singular_resolvent,
  singular_h,
  singular_cayley,
  singular_matrix,
  gram_singular,
  not_unitary,
  invalid_argument,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::symmetry_violation: return "SymmetryViolation";
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::too_many_factors: return "TooManyFactors";
    case ErrorCode::divergent_point: return "DivergentPoint";
    case ErrorCode::not_intrinsic: return "NotIntrinsic";
    case ErrorCode::singular_constant_term: return "SingularConstantTerm";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::division_by_t: return "DivisionByT";
    case ErrorCode::non_contractive_iterate: return "NonContractiveIterate";
    case ErrorCode::non_decaying_state: return "NonDecayingState";
    case ErrorCode::singular_resolvent: return "SingularResolvent";
    case ErrorCode::singular_h: return "SingularH";
    case ErrorCode::singular_cayley: return "SingularCayley";
    case ErrorCode::singular_matrix: return "SingularMatrix";
    case ErrorCode::gram_singular: return "GramSingular";
    case ErrorCode::not_unitary: return "NotUnitary";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace axial

#endif  // AXIAL_ERROR_HPP
