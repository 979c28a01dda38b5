#include "tanaka/document.hpp"

#include <json.hpp>

#include <map>
#include <set>

#include "tanaka/cochain.hpp"
#include "tanaka/error.hpp"

namespace tanaka {

namespace {

using json = nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

void require_keys(const json& obj, const std::string& where, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!obj.is_object()) schema_error(where + " must be an object");
  for (const auto& key : required) {
    if (!obj.contains(key)) schema_error(where + " is missing \"" + key + "\"");
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!required.count(it.key()) && !optional.count(it.key())) {
      schema_error(where + " has unexpected key \"" + it.key() + "\"");
    }
  }
}

Rational rational_of(const json& v, const std::string& where) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  schema_error(where + " must be a rational string");
}

std::string string_of(const json& v, const std::string& where) {
  if (!v.is_string()) schema_error(where + " must be a string");
  return v.get<std::string>();
}

int int_of(const json& v, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where + " must be an integer");
  return v.get<int>();
}

Matrix matrix_of(const json& v, const std::string& where) {
  if (!v.is_array()) schema_error(where + " must be a list of rows");
  const std::size_t rows = v.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!v[r].is_array()) schema_error(where + " row " + std::to_string(r) + " must be a list");
    if (r == 0) cols = v[r].size();
    if (v[r].size() != cols) schema_error(where + " has ragged rows");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rational_of(v[r][c], where));
  return m;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::map<int, Vector> parse_components(const GradedLieAlgebra& g, std::string_view text, std::size_t form_degree) {
  const json doc = parse_json(text);
  require_keys(doc, "cochain file", {"components", "form_degree"});
  if (int_of(doc["form_degree"], "form_degree") != static_cast<int>(form_degree)) {
    schema_error("form_degree must be " + std::to_string(form_degree));
  }
  const json& comps = doc["components"];
  if (!comps.is_object()) schema_error("components must be an object keyed by degree");
  std::map<int, Vector> out;
  for (auto it = comps.begin(); it != comps.end(); ++it) {
    int m = 0;
    try {
      std::size_t used = 0;
      m = std::stoi(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument(it.key());
    } catch (const std::exception&) {
      schema_error("component key \"" + it.key() + "\" is not an integer degree");
    }
    if (!it.value().is_array()) schema_error("component " + it.key() + " must be a list");
    Vector v;
    for (const auto& x : it.value()) v.push_back(rational_of(x, "component " + it.key()));
    if (m >= 1 && v.size() != CochainSpace(g, form_degree, m).dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "component " + it.key() + " has " + std::to_string(v.size()) +
                                                     " coefficients, expected " +
                                                     std::to_string(CochainSpace(g, form_degree, m).dim()));
    }
    out.emplace(m, std::move(v));
  }
  return out;
}

std::string emit_components(const std::map<int, Vector>& comps, std::size_t form_degree) {
  json c = json::object();
  for (const auto& [m, v] : comps) {
    json list = json::array();
    for (const auto& x : v) list.push_back(x.to_string());
    c[std::to_string(m)] = std::move(list);
  }
  json doc;
  doc["components"] = std::move(c);
  doc["form_degree"] = form_degree;
  return dump(doc);
}

}  // namespace

AlgebraDocument parse_document(std::string_view text) {
  const json doc = parse_json(text);
  require_keys(doc, "document", {"basis", "brackets", "name"}, {"involution", "metric"});

  const std::string name = string_of(doc["name"], "name");
  if (!doc["basis"].is_array()) schema_error("basis must be a list");
  std::vector<BasisElement> basis;
  std::map<std::string, std::size_t> index;
  for (const auto& b : doc["basis"]) {
    require_keys(b, "basis entry", {"degree", "label"});
    BasisElement e{string_of(b["label"], "label"), int_of(b["degree"], "degree")};
    if (e.label.empty()) schema_error("empty basis label");
    if (!index.emplace(e.label, basis.size()).second) schema_error("duplicate label \"" + e.label + "\"");
    basis.push_back(std::move(e));
  }
  auto lookup = [&index](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) schema_error("unknown label \"" + label + "\"");
    return it->second;
  };

  if (!doc["brackets"].is_array()) schema_error("brackets must be a list");
  GradedLieAlgebra::BracketTable table;
  for (const auto& entry : doc["brackets"]) {
    require_keys(entry, "bracket entry", {"i", "j", "value"});
    const std::size_t i = lookup(string_of(entry["i"], "bracket i"));
    const std::size_t j = lookup(string_of(entry["j"], "bracket j"));
    if (i >= j) schema_error("bracket [" + basis[i].label + ", " + basis[j].label + "] must list the earlier label first");
    if (table.count({i, j})) schema_error("bracket [" + basis[i].label + ", " + basis[j].label + "] given twice");
    if (!entry["value"].is_object()) schema_error("bracket value must be an object");
    SparseVector value;
    for (auto it = entry["value"].begin(); it != entry["value"].end(); ++it) {
      const Rational c = rational_of(it.value(), "bracket coefficient");
      if (!c.is_zero()) value.emplace_back(lookup(it.key()), c);
    }
    table[{i, j}] = std::move(value);
  }

  AlgebraDocument out;
  out.algebra = GradedLieAlgebra(name, std::move(basis), table);

  if (doc.contains("metric")) {
    const json& metric = doc["metric"];
    require_keys(metric, "metric", {"blocks"});
    if (!metric["blocks"].is_object()) schema_error("metric blocks must be an object keyed by degree");
    std::map<int, Matrix> blocks;
    for (auto it = metric["blocks"].begin(); it != metric["blocks"].end(); ++it) {
      int d = 0;
      try {
        std::size_t used = 0;
        d = std::stoi(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument(it.key());
      } catch (const std::exception&) {
        schema_error("metric block key \"" + it.key() + "\" is not an integer degree");
      }
      blocks.emplace(d, matrix_of(it.value(), "metric block " + it.key()));
    }
    out.metric = AdaptedMetric(out.algebra, std::move(blocks));
  }
  if (doc.contains("involution")) {
    Matrix theta = matrix_of(doc["involution"], "involution");
    if (theta.rows() != out.algebra.dim() || theta.cols() != out.algebra.dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "involution must be " + std::to_string(out.algebra.dim()) + "x" +
                                                     std::to_string(out.algebra.dim()));
    }
    out.involution = std::move(theta);
  }
  return out;
}

std::string emit_document(const AlgebraDocument& doc) {
  const GradedLieAlgebra& g = doc.algebra;
  json out;
  out["name"] = g.name();
  json basis = json::array();
  for (const auto& b : g.basis()) basis.push_back({{"degree", b.degree}, {"label", b.label}});
  out["basis"] = std::move(basis);
  json brackets = json::array();
  for (const auto& [ij, value] : g.brackets()) {
    json v = json::object();
    for (const auto& [k, c] : value) v[g.label(k)] = c.to_string();
    brackets.push_back({{"i", g.label(ij.first)}, {"j", g.label(ij.second)}, {"value", std::move(v)}});
  }
  out["brackets"] = std::move(brackets);
  if (doc.metric) {
    json blocks = json::object();
    for (const auto& [d, b] : doc.metric->blocks()) blocks[std::to_string(d)] = matrix_json(b);
    out["metric"] = {{"blocks", std::move(blocks)}};
  }
  if (doc.involution) out["involution"] = matrix_json(*doc.involution);
  return dump(out);
}

FormalCurvature parse_curvature(const GradedLieAlgebra& g, std::string_view text) {
  return canonical(g, FormalCurvature{parse_components(g, text, 2)});
}

GaugeCorrection parse_gauge(const GradedLieAlgebra& g, std::string_view text) {
  return canonical(g, GaugeCorrection{parse_components(g, text, 1)});
}

std::string emit_curvature(const FormalCurvature& k) { return emit_components(k.components, 2); }

std::string emit_gauge(const GaugeCorrection& phi) { return emit_components(phi.components, 1); }

}  // namespace tanaka
