#pragma once

#include <stdexcept>
#include <string>

namespace wildrep {

/// Failure categories. The CLI maps each one to a stable exit code.
enum class ErrorKind {
  InsufficientPrecision,
  NotACube,
  Singular,
  NotPotentiallyGood,
  AbelianInertia,
  FieldTooSmall,
  WrongBranch,
  Precondition,
  Parse,
  Internal,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InsufficientPrecision: return "insufficient_precision";
    case ErrorKind::NotACube: return "not_a_cube";
    case ErrorKind::Singular: return "singular_model";
    case ErrorKind::NotPotentiallyGood: return "not_potential_good_reduction";
    case ErrorKind::AbelianInertia: return "abelian_inertia_out_of_scope";
    case ErrorKind::FieldTooSmall: return "field_too_small";
    case ErrorKind::WrongBranch: return "wrong_branch";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace wildrep
