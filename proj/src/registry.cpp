#include "tanaka/registry.hpp"

#include "tanaka/error.hpp"

namespace tanaka {

namespace {

using Table = GradedLieAlgebra::BracketTable;

GradedLieAlgebra make_heis3() {
  // X, Y, Z, E with [X, Y] = Z and E the grading element.
  Table t;
  t[{0, 1}] = {{2, Rational(1)}};
  t[{0, 3}] = {{0, Rational(1)}};   // [X, E] = X
  t[{1, 3}] = {{1, Rational(1)}};   // [Y, E] = Y
  t[{2, 3}] = {{2, Rational(2)}};   // [Z, E] = 2Z
  return GradedLieAlgebra("heis3", {{"X", -1}, {"Y", -1}, {"Z", -2}, {"E", 0}}, t);
}

GradedLieAlgebra make_sl2_graded() {
  // f, h, e with [h, e] = 2e, [h, f] = -2f, [e, f] = h.
  Table t;
  t[{0, 1}] = {{0, Rational(2)}};   // [f, h] = 2f
  t[{0, 2}] = {{1, Rational(-1)}};  // [f, e] = -h
  t[{1, 2}] = {{2, Rational(2)}};   // [h, e] = 2e
  return GradedLieAlgebra("sl2-graded", {{"f", -1}, {"h", 0}, {"e", 1}}, t);
}

GradedLieAlgebra make_so2_v2() {
  GradedLieAlgebra so2("so2", {{"J", 0}}, {});
  Matrix j(2, 2);
  j.set(0, 1, Rational(-1));
  j.set(1, 0, Rational(1));
  return from_representation("so2-V2", so2, {j}, {"X1", "X2"});
}

GradedLieAlgebra make_nonab_g0() {
  Table t;
  t[{0, 1}] = {{1, Rational(1)}};  // [E, N] = N
  GradedLieAlgebra g0("b", {{"E", 0}, {"N", 0}}, t);
  Matrix e(2, 2);
  e.set(0, 0, Rational(1));
  Matrix nmat(2, 2);
  nmat.set(0, 1, Rational(1));
  return from_representation("nonab-g0", g0, {e, nmat}, {"X1", "X2"});
}

GradedLieAlgebra make_free_nilp_2_3() {
  // X1..X3 (deg -1), Z12, Z13, Z23 (deg -2), gl(3) = span E_ab (deg 0).
  std::vector<BasisElement> basis = {{"X1", -1}, {"X2", -1}, {"X3", -1},
                                     {"Z12", -2}, {"Z13", -2}, {"Z23", -2}};
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) basis.push_back({"E" + std::to_string(a) + std::to_string(b), 0});
  auto x = [](int a) -> std::size_t { return static_cast<std::size_t>(a); };
  auto e = [](int a, int b) -> std::size_t { return static_cast<std::size_t>(6 + 3 * a + b); };
  // Z_ab = [X_a, X_b] as a signed basis vector.
  auto z = [](int a, int b) -> SparseVector {
    if (a == b) return {};
    const int lo = std::min(a, b), hi = std::max(a, b);
    const std::size_t idx = (lo == 0 && hi == 1) ? 3 : (lo == 0 && hi == 2) ? 4 : 5;
    return {{idx, Rational(a < b ? 1 : -1)}};
  };
  Table t;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) t[{x(a), x(b)}] = z(a, b);
  auto add = [&t](std::size_t i, std::size_t j, const SparseVector& v) {
    for (const auto& [k, c] : v) {
      if (i < j) {
        t[{i, j}].emplace_back(k, c);
      } else {
        t[{j, i}].emplace_back(k, -c);
      }
    }
  };
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      // [E_ab, X_c] = delta_bc X_a
      add(e(a, b), x(b), {{x(a), Rational(1)}});
      // [E_ab, Z_cd] = delta_bc Z_ad + delta_bd Z_ca
      const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
      for (int p = 0; p < 3; ++p) {
        const int c = pairs[p][0], d = pairs[p][1];
        const std::size_t zcd = static_cast<std::size_t>(3 + p);
        if (b == c) add(e(a, b), zcd, z(a, d));
        if (b == d) add(e(a, b), zcd, z(c, a));
      }
      // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
      for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d) {
          if (e(a, b) >= e(c, d)) continue;
          SparseVector v;
          if (b == c) v.emplace_back(e(a, d), Rational(1));
          if (d == a) v.emplace_back(e(c, b), Rational(-1));
          add(e(a, b), e(c, d), v);
        }
      }
    }
  }
  return GradedLieAlgebra("free-nilp-2-3", std::move(basis), t);
}

}  // namespace

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names = {"heis3", "sl2-graded", "so2-V2", "nonab-g0", "free-nilp-2-3"};
  return names;
}

GradedLieAlgebra registry_get(std::string_view name) {
  if (name.starts_with("t*(") && name.ends_with(")")) {
    return cotangent(registry_get(name.substr(3, name.size() - 4)));
  }
  GradedLieAlgebra g;
  if (name == "heis3") {
    g = make_heis3();
  } else if (name == "sl2-graded") {
    g = make_sl2_graded();
  } else if (name == "so2-V2") {
    g = make_so2_v2();
  } else if (name == "nonab-g0") {
    g = make_nonab_g0();
  } else if (name == "free-nilp-2-3") {
    g = make_free_nilp_2_3();
  } else {
    throw Error(ErrorCode::kUnknownName, "no built-in algebra named '" + std::string(name) + "'");
  }
  require_valid(g, true);
  return g;
}

std::optional<Matrix> registry_involution(std::string_view name) {
  if (name != "sl2-graded") return std::nullopt;
  Matrix theta(3, 3);
  theta.set(2, 0, Rational(-1));
  theta.set(1, 1, Rational(-1));
  theta.set(0, 2, Rational(-1));
  return theta;
}

GradedLieAlgebra gl_algebra(std::size_t n) {
  std::vector<BasisElement> basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) basis.push_back({"E" + std::to_string(a + 1) + std::to_string(b + 1), 0});
  Table t;
  auto idx = [n](std::size_t a, std::size_t b) { return a * n + b; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (idx(a, b) >= idx(c, d)) continue;
          SparseVector v;
          if (b == c) v.emplace_back(idx(a, d), Rational(1));
          if (d == a) v.emplace_back(idx(c, b), Rational(-1));
          if (!v.empty()) t[{idx(a, b), idx(c, d)}] = v;
        }
  return GradedLieAlgebra("gl" + std::to_string(n), std::move(basis), t);
}

std::vector<Matrix> gl_defining_action(std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix m(n, n);
      m.set(a, b, Rational(1));
      out.push_back(std::move(m));
    }
  return out;
}

GradedLieAlgebra gl_representation_algebra(std::size_t n) {
  return from_representation("gl" + std::to_string(n) + "-V" + std::to_string(n), gl_algebra(n),
                             gl_defining_action(n));
}

GradedLieAlgebra scalar_line() {
  Table t;
  t[{0, 1}] = {{0, Rational(1)}};  // [X, E] = X
  GradedLieAlgebra g("line-scalars", {{"X", -1}, {"E", 0}}, t);
  require_valid(g, true);
  return g;
}

}  // namespace tanaka
