#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tanaka/graded_lie.hpp"

namespace tanaka {

/// Names of the built-in algebras, in a fixed order.
const std::vector<std::string>& registry_names();

/// A validated built-in algebra. "t*(name)" composes with the cotangent construction.
/// Throws Error(kUnknownName).
GradedLieAlgebra registry_get(std::string_view name);

/// The standard Cartan involution of a built-in algebra when it has one (sl2-graded:
/// e -> -f, h -> -h, f -> -e), as the matrix whose column j is the image of e_j.
std::optional<Matrix> registry_involution(std::string_view name);

/// gl(n) as a Lie algebra concentrated in degree 0, basis E_ab in row-major order.
GradedLieAlgebra gl_algebra(std::size_t n);
/// Matrix units E_ab acting on R^n, same order as gl_algebra.
std::vector<Matrix> gl_defining_action(std::size_t n);
/// R^n (degree -1, abelian) + gl(n).
GradedLieAlgebra gl_representation_algebra(std::size_t n);
/// One-dimensional negative part with scalar degree-zero part.
GradedLieAlgebra scalar_line();

}  // namespace tanaka
