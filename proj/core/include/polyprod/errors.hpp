#ifndef POLYPROD_ERRORS_HPP
#define POLYPROD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyprod {

/// Machine-readable failure kinds.  `Limit` codes mean the request exceeded a
/// configured computational budget (sieve size, enumeration cap, integer
/// width) rather than being malformed.
enum class ErrorCode {
  DegreeError,
  UnsupportedDegree,
  InvalidFactorization,
  InvalidInput,
  InvalidSeed,
  DomainError,
  ParseError,
  NoSuchCharacter,
  UndefinedProduct,
  NoPrimes,
  InternalInconsistency,
  XTooSmall,
  EmptyPrimeSet,
  NotApplicable,
  TheoremInapplicable,
  // limit-type codes
  SieveTooSmall,
  CapExceeded,
  ValueTooWide,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DegreeError: return "DegreeError";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::InvalidFactorization: return "InvalidFactorization";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidSeed: return "InvalidSeed";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NoSuchCharacter: return "NoSuchCharacter";
    case ErrorCode::UndefinedProduct: return "UndefinedProduct";
    case ErrorCode::NoPrimes: return "NoPrimes";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::XTooSmall: return "XTooSmall";
    case ErrorCode::EmptyPrimeSet: return "EmptyPrimeSet";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::TheoremInapplicable: return "TheoremInapplicable";
    case ErrorCode::SieveTooSmall: return "SieveTooSmall";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ValueTooWide: return "ValueTooWide";
  }
  return "UnknownError";
}

/// True for codes that map to the CLI's "computational limit" exit status.
inline bool is_limit_error(ErrorCode c) {
  return c == ErrorCode::SieveTooSmall || c == ErrorCode::CapExceeded ||
         c == ErrorCode::ValueTooWide;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace polyprod

#endif
