#ifndef ALGEBROID_RATIONAL_HPP
#define ALGEBROID_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace algebroid {

/// Exact rational scalar. GMP keeps gcd(num, den) = 1 and den > 0 after
/// every operation.
using Rational = boost::multiprecision::mpq_rational;
using QVec = std::vector<Rational>;

enum class ErrorCode {
  DegreeOutOfRange,
  ConnectionMismatch,
  NotTotallyIntransitive,
  NotFlat,
  BoundaryNotInCycles,
  NoRhoSolution,
  CenterEscape,
  CouplingMismatch,
  NotClosed,
  NotASection,
  MissingRestriction,
  NoPhiSolution,
  TrivializationInvalid,
  NotACocycle,
  NotInZ2,
  TruncationUnstable,
  ParseError,
  Internal,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::ConnectionMismatch: return "ConnectionMismatch";
    case ErrorCode::NotTotallyIntransitive: return "NotTotallyIntransitive";
    case ErrorCode::NotFlat: return "NotFlat";
    case ErrorCode::BoundaryNotInCycles: return "BoundaryNotInCycles";
    case ErrorCode::NoRhoSolution: return "NoRhoSolution";
    case ErrorCode::CenterEscape: return "CenterEscape";
    case ErrorCode::CouplingMismatch: return "CouplingMismatch";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotASection: return "NotASection";
    case ErrorCode::MissingRestriction: return "MissingRestriction";
    case ErrorCode::NoPhiSolution: return "NoPhiSolution";
    case ErrorCode::TrivializationInvalid: return "TrivializationInvalid";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotInZ2: return "NotInZ2";
    case ErrorCode::TruncationUnstable: return "TruncationUnstable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Parse "p/q" or "p". Throws ParseError on malformed input.
inline Rational parse_rational(const std::string& s) {
  try {
    if (s.empty()) throw std::invalid_argument("empty");
    return Rational(s);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  }
}

inline std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace algebroid

#endif
