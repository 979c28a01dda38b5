#include "tanaka/rational.hpp"

#include <cctype>

#include "tanaka/error.hpp"

namespace tanaka {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonSymmetric: return "NonSymmetric";
    case ErrorCode::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotNonPositivelyGraded: return "NotNonPositivelyGraded";
    case ErrorCode::kValidationFailure: return "ValidationFailure";
    case ErrorCode::kNotARepresentation: return "NotARepresentation";
    case ErrorCode::kNotExact: return "NotExact";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kArgumentNotInNegativePart: return "ArgumentNotInNegativePart";
    case ErrorCode::kTailDegreeViolation: return "TailDegreeViolation";
    case ErrorCode::kDegenerateKilling: return "DegenerateKilling";
    case ErrorCode::kNotAdapted: return "NotAdapted";
    case ErrorCode::kInvalidInvolution: return "InvalidInvolution";
    case ErrorCode::kRangeError: return "RangeError";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::kParseError, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kInternalInconsistency, "division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw Error(ErrorCode::kParseError, "bad rational string '" + std::string(text) + "'");
    }
    return Rational(mpq_class(parse_integer(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::kParseError, "bad rational string '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(parse_integer(num), d));
}

}  // namespace tanaka
