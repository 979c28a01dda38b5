#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tanaka/graded_lie.hpp"
#include "tanaka/hodge.hpp"
#include "tanaka/matrix.hpp"
#include "tanaka/normalization.hpp"

namespace tanaka {

/// An algebra together with the optional objects that travel with it.
///
/// JSON layout (keys sorted, two-space indent, trailing newline):
///
///     {
///       "basis": [{"degree": -1, "label": "X"}, ...],
///       "brackets": [{"i": "X", "j": "Y", "value": {"Z": "1"}}, ...],
///       "involution": [["0", "1"], ...],            (optional)
///       "metric": {"blocks": {"-1": [["1", "0"], ...], ...}},  (optional)
///       "name": "heis3"
///     }
///
/// Rationals are strings "p" or "p/q" with q > 0; bare JSON integers are accepted
/// on input. Bracket entries list [e_i, e_j] with i before j in the basis.
struct AlgebraDocument {
  GradedLieAlgebra algebra;
  std::optional<AdaptedMetric> metric;
  std::optional<Matrix> involution;
};

/// Throws Error(kParseError) for malformed JSON, schema violations, duplicate labels,
/// unknown labels, misordered or repeated bracket pairs and bad rational strings.
/// Metric blocks go through AdaptedMetric validation (kDimensionMismatch,
/// kNonSymmetric, kNotPositiveDefinite).
AlgebraDocument parse_document(std::string_view text);
std::string emit_document(const AlgebraDocument& doc);

/// Curvature and gauge files:
///
///     {"components": {"1": ["0", "1/2", ...], ...}, "form_degree": 2}
///
/// Each list holds the coefficients over the canonical basis of C^k_m.
FormalCurvature parse_curvature(const GradedLieAlgebra& g, std::string_view text);
GaugeCorrection parse_gauge(const GradedLieAlgebra& g, std::string_view text);
std::string emit_curvature(const FormalCurvature& k);
std::string emit_gauge(const GaugeCorrection& phi);

}  // namespace tanaka
