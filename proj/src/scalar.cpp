#include "orbitkit/scalar.hpp"

#include <string>

#include "orbitkit/error.hpp"

namespace orbitkit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::EigenvaluesNotDistinct: return "EigenvaluesNotDistinct";
    case ErrorCode::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::ScalarKindMismatch: return "ScalarKindMismatch";
    case ErrorCode::InvalidGroupTable: return "InvalidGroupTable";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::LinearlyDependentOrbit: return "LinearlyDependentOrbit";
    case ErrorCode::DegenerateContraction: return "DegenerateContraction";
    case ErrorCode::InconsistentScale: return "InconsistentScale";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::DegenerateSample: return "DegenerateSample";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view scalar_kind_name(ScalarKind kind) { return kind == ScalarKind::Exact ? "exact" : "f64"; }

Rational make_rational(long p, long q) {
  if (q == 0) throw Error(ErrorCode::OutOfRange, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&] { return Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  mpz_class p(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class q(std::string(den), 10);
  if (sgn(q) == 0) throw bad();
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& v) { return v.get_str(10); }

}  // namespace orbitkit
