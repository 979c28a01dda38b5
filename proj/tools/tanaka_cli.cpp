// tanaka: command-line front end for graded Lie algebra cohomology, admissible
// metrics, cotangent algebras, prolongation and curvature normalization.
//
// Every subcommand prints a RunReport (plain text, or JSON with --json) to stdout.
// Exit status: 0 success, 1 mathematical validation failure, 2 internal
// inconsistency, 64 usage or format error. Files are written only when the
// command succeeds.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tanaka/admissibility.hpp"
#include "tanaka/cochain.hpp"
#include "tanaka/cohomology_ctg.hpp"
#include "tanaka/document.hpp"
#include "tanaka/error.hpp"
#include "tanaka/hodge.hpp"
#include "tanaka/normalization.hpp"
#include "tanaka/prolongation.hpp"
#include "tanaka/registry.hpp"
#include "tanaka/report.hpp"

namespace fs = std::filesystem;
using namespace tanaka;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitInternal = 2;
constexpr int kExitUsage = 64;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kUnknownName:
    case ErrorCode::kRangeError:
      return kExitUsage;
    case ErrorCode::kInternalInconsistency:
      return kExitInternal;
    default:
      return kExitMath;
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool parallel = false;
  std::string out_dir;
};

// Files produced by a command, written in one go after it succeeds.
class PendingOutputs {
 public:
  void add(std::string name, std::string content) { files_.emplace_back(std::move(name), std::move(content)); }
  bool empty() const { return files_.empty(); }
  const std::vector<std::pair<std::string, std::string>>& files() const { return files_; }

  void commit(const fs::path& dir) const {
    std::error_code ec;
    fs::create_directories(dir, ec);
    std::vector<fs::path> staged;
    auto discard = [&staged] {
      for (const auto& p : staged) fs::remove(p);
    };
    for (const auto& [name, content] : files_) {
      const fs::path tmp = dir / (name + ".partial");
      std::ofstream os(tmp, std::ios::binary);
      os << content;
      os.close();
      staged.push_back(tmp);
      if (!os) {
        discard();
        throw std::runtime_error("cannot write " + (dir / name).string());
      }
    }
    for (std::size_t i = 0; i < files_.size(); ++i) {
      fs::rename(staged[i], dir / files_[i].first, ec);
      if (ec) {
        discard();
        throw std::runtime_error("cannot write " + (dir / files_[i].first).string());
      }
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

constexpr std::string_view kRegistryPrefix = "registry:";

AlgebraDocument registry_document(const std::string& name, const std::string& metric) {
  AlgebraDocument doc;
  doc.algebra = registry_get(name);
  doc.involution = registry_involution(name);
  if (metric == "identity") {
    doc.metric = AdaptedMetric::identity(doc.algebra);
  } else if (metric == "btheta") {
    if (!doc.involution) throw UsageError("no standard involution for " + name);
    doc.metric = btheta_metric(doc.algebra, make_involution(doc.algebra, *doc.involution));
  } else if (!metric.empty()) {
    throw UsageError("registry metric must be identity or btheta");
  }
  return doc;
}

// Loads a document from a file, or from "registry:<name>", and records its digest.
AlgebraDocument load_document(const std::string& source, RunReport& report, const std::string& role = "algebra") {
  std::string text;
  if (source.starts_with(kRegistryPrefix)) {
    text = emit_document(registry_document(source.substr(kRegistryPrefix.size()), ""));
  } else {
    text = read_file(source);
  }
  report.add_input(role, source, text);
  AlgebraDocument doc = parse_document(text);
  if (doc.involution) make_involution(doc.algebra, *doc.involution);
  return doc;
}

// "document" (or empty) uses the embedded metric and falls back to identity;
// "identity", "btheta" and "random:<seed>" override it.
AdaptedMetric choose_metric(const AlgebraDocument& doc, const std::string& spec, ReportSection& section) {
  if (spec.empty() || spec == "document") {
    section.field("metric", doc.metric ? "document" : "identity");
    return doc.metric ? *doc.metric : AdaptedMetric::identity(doc.algebra);
  }
  section.field("metric", spec);
  if (spec == "identity") return AdaptedMetric::identity(doc.algebra);
  if (spec == "btheta") {
    if (!doc.involution) throw UsageError("--metric btheta needs an involution in the document");
    return btheta_metric(doc.algebra, make_involution(doc.algebra, *doc.involution));
  }
  if (spec.starts_with("random:")) {
    try {
      return random_adapted_metric(doc.algebra, std::stoull(spec.substr(7)));
    } catch (const std::logic_error&) {
      throw UsageError("bad seed in " + spec);
    }
  }
  throw UsageError("unknown metric source " + spec);
}

std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

void report_witness(ReportSection& s, const AdmissibilityVerdict& v) {
  s.flag("admissible", v.admissible);
  if (v.witness) {
    const auto& w = *v.witness;
    s.field("witness", "A=" + w.a + " Z=" + w.z + " W=" + w.w + " identity=" + std::to_string(w.identity));
    s.field("witness lhs", vector_text(w.lhs));
    s.field("witness rhs", vector_text(w.rhs));
  }
}

// "t*(so2-V2)" -> "cotangent-so2-V2"; other characters outside [A-Za-z0-9_-] become '_'.
std::string file_stem(std::string name) {
  while (name.starts_with("t*(") && name.ends_with(")")) name = "cotangent-" + name.substr(3, name.size() - 4);
  for (auto& c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  }
  return name;
}

// ---------------------------------------------------------------------------
// Subcommands. Each fills the report and pending outputs and returns an exit code.

int run_registry_list(RunReport& report) {
  auto& s = report.add_section("registry", "built-in algebras");
  ReportTable t{"algebras", {"name", "dim", "depth", "height"}, {}};
  for (const auto& n : registry_names()) {
    const auto g = registry_get(n);
    t.rows.push_back({n, std::to_string(g.dim()), std::to_string(g.depth()), std::to_string(g.height())});
  }
  s.tables.push_back(std::move(t));
  return kExitOk;
}

int run_validate(const AlgebraDocument& doc, bool fundamental, bool exact, RunReport& report) {
  auto& s = report.add_section("validate", "graded Lie algebra axioms");
  s.field("algebra", doc.algebra.name());
  s.count("dimension", doc.algebra.dim());
  s.flag("fundamental checks", fundamental);
  s.flag("exactness check", fundamental && exact);
  const ValidationReport v = validate(doc.algebra, fundamental, exact);
  s.flag("valid", v.ok());
  s.flag("metric present", doc.metric.has_value());
  s.flag("involution present", doc.involution.has_value());
  if (!v.ok()) {
    ReportTable t{"failures", {"axiom", "witness", "detail"}, {}};
    for (const auto& f : v.failures) {
      std::string w;
      for (const auto& l : f.witness) w += (w.empty() ? "" : " ") + l;
      t.rows.push_back({to_string(f.axiom), w, f.detail});
    }
    s.tables.push_back(std::move(t));
    return kExitMath;
  }
  return kExitOk;
}

int run_cohomology(const AlgebraDocument& doc, const std::string& metric_spec, int k, int l_min, int l_max,
                   RunReport& report) {
  if (k < 0 || k > static_cast<int>(kMaxFormDegree) - 1) throw UsageError("--k must lie in 0..4");
  require_valid(doc.algebra, false);
  auto& s = report.add_section("cohomology", "H^" + std::to_string(k) + "_l by Hodge and by ker/im");
  s.field("algebra", doc.algebra.name());
  const AdaptedMetric metric = choose_metric(doc, metric_spec, s);
  ReportTable t{"dimensions", {"l", "dim C^k_l", "harmonic", "ker/im", "agree"}, {}};
  bool all_agree = true;
  for (int l = l_min; l <= l_max; ++l) {
    const HodgeSplit split = hodge_decompose(doc.algebra, metric, static_cast<std::size_t>(k), l);
    const std::size_t harmonic =
        laplacian_nullity(doc.algebra, metric, static_cast<std::size_t>(k), l, split.harmonic);
    const std::size_t kernel_image = betti(doc.algebra, static_cast<std::size_t>(k), l);
    const bool agree = harmonic == kernel_image;
    all_agree = all_agree && agree;
    t.rows.push_back({std::to_string(l), std::to_string(split.gram.rows()), std::to_string(harmonic),
                      std::to_string(kernel_image), agree ? "yes" : "no"});
  }
  s.tables.push_back(std::move(t));
  s.flag("paths agree", all_agree);
  if (!all_agree) {
    report.message = "harmonic and ker/im dimensions disagree";
    return kExitInternal;
  }
  return kExitOk;
}

int run_admissible(const AlgebraDocument& doc, const std::string& metric_spec, bool parallel, RunReport& report) {
  require_valid(doc.algebra, false);
  auto& s = report.add_section("admissibility", "infinitesimal q-equivariance of the codifferential");
  s.field("algebra", doc.algebra.name());
  const AdaptedMetric metric = choose_metric(doc, metric_spec, s);
  const AdmissibilityVerdict verdict = check_admissible(doc.algebra, metric, parallel);
  report_witness(s, verdict);
  auto& d = report.add_section("direct check", "commutation of the codifferential with the q-action, k = 0, 1");
  bool direct = true;
  for (std::size_t k = 0; k <= 1; ++k) {
    const EquivarianceResult r = check_equivariance_direct(doc.algebra, metric, k);
    d.flag("commutes on C^" + std::to_string(k + 1) + " -> C^" + std::to_string(k), r.commutes);
    if (r.failing_element) d.field("first failing element, k=" + std::to_string(k), *r.failing_element);
    direct = direct && r.commutes;
  }
  d.flag("verdicts agree", direct == verdict.admissible);
  if (direct != verdict.admissible) {
    report.message = "identity check and direct check disagree";
    return kExitInternal;
  }
  return kExitOk;
}

int run_cotangent(const AlgebraDocument& doc, const std::string& grading_name, const std::string& output,
                  RunReport& report, PendingOutputs& outputs) {
  CotangentGrading grading = CotangentGrading::kNonPositiveOnly;
  if (grading_name == "any") {
    grading = CotangentGrading::kAnyGrading;
  } else if (grading_name != "standard") {
    throw UsageError("--grading must be standard or any");
  }
  require_valid(doc.algebra, false);
  auto& s = report.add_section("cotangent", "t*(g) = g + g* with the coadjoint action");
  s.field("algebra", doc.algebra.name());
  s.field("grading", grading_name);
  AlgebraDocument out;
  if (doc.metric) {
    const CotangentMetric ctg = cotangent_standard_metric(doc.algebra, *doc.metric, grading);
    out.algebra = ctg.algebra;
    out.metric = ctg.metric;
    out.involution = ctg.theta.matrix;
    s.flag("standard metric embedded", true);
    const CotangentObstructionReport obs = cotangent_obstruction_diagnostics(doc.algebra, *doc.metric);
    auto& o = report.add_section("cotangent obstruction", "admissible cotangent metric forces abelian g0");
    o.flag("g0 abelian", obs.g0_abelian);
    o.flag("metric g0-invariant", obs.gram_invariant);
    report_witness(o, obs.verdict);
    o.flag("implication holds", obs.implication_holds);
  } else {
    out.algebra = cotangent(doc.algebra, grading);
    s.flag("standard metric embedded", false);
  }
  s.field("result", out.algebra.name());
  s.count("dimension", out.algebra.dim());
  s.count("depth", static_cast<std::size_t>(out.algebra.depth()));
  s.field("height", std::to_string(out.algebra.height()));
  outputs.add(output.empty() ? file_stem(out.algebra.name()) + ".json" : output, emit_document(out));
  return kExitOk;
}

int run_prolong(const AlgebraDocument& doc, int max_k, RunReport& report) {
  if (max_k < 1) throw UsageError("--max-k must be at least 1");
  auto& s = report.add_section("prolongation", "Tanaka prolongation levels");
  s.field("algebra", doc.algebra.name());
  const ProlongationResult r = prolong(doc.algebra, max_k);
  ReportTable t{"levels", {"k", "dim g_k"}, {}};
  for (const auto& level : r.levels) t.rows.push_back({std::to_string(level.k), std::to_string(level.dim())});
  s.tables.push_back(std::move(t));
  s.flag("finite type", r.finite_type);
  s.flag("determined by degree -1", r.determined_by_generators);
  return kExitOk;
}

int run_normalize(const AlgebraDocument& doc, const std::string& metric_spec, const std::string& curvature_path,
                  bool parallel, RunReport& report, PendingOutputs& outputs) {
  require_valid(doc.algebra, false);
  const std::string text = read_file(curvature_path);
  report.add_input("curvature", curvature_path, text);
  const FormalCurvature k = parse_curvature(doc.algebra, text);
  auto& s = report.add_section("normalization", "degree-by-degree removal of exact parts");
  s.field("algebra", doc.algebra.name());
  const AdaptedMetric metric = choose_metric(doc, metric_spec, s);
  const Normalizer normalizer(doc.algebra, metric, parallel);
  const NormalizationResult r = normalizer.normalize(k);
  s.count("steps", r.steps);
  s.field("max degree", std::to_string(normalizer.max_degree()));
  ReportTable t{"trace", {"m", "dim C^2_m", "harmonic", "coexact", "exact", "corrected"}, {}};
  for (const auto& step : r.trace) {
    t.rows.push_back({std::to_string(step.m), std::to_string(step.block_dim), std::to_string(step.harmonic_dim),
                      std::to_string(step.coexact_dim), std::to_string(step.exact_dim), step.corrected ? "yes" : "no"});
  }
  s.tables.push_back(std::move(t));
  const bool normal = normalizer.is_normal(r.normal);
  s.flag("output coclosed", normal);
  if (!normal) {
    report.message = "normalized curvature is not coclosed";
    return kExitInternal;
  }
  outputs.add("normal_curvature.json", emit_curvature(r.normal));
  outputs.add("gauge_correction.json", emit_gauge(r.phi));
  return kExitOk;
}

int run_ctg_report(const AlgebraDocument& doc, const std::string& metric_spec, bool parallel, RunReport& report) {
  require_valid(doc.algebra, true);
  auto& s = report.add_section("cotangent cohomology", "closed-form H^1_l of t*(g) against the Hodge computation");
  s.field("algebra", doc.algebra.name());
  const AdaptedMetric gram_g = choose_metric(doc, metric_spec, s);
  const CtgCohomologyReport r = ctg_cohomology_report(doc.algebra, gram_g, parallel);
  ReportTable t{"degrees", {"l", "dim S", "dim Z", "dim B", "closed form", "general", "agree"}, {}};
  for (const auto& row : r.rows) {
    t.rows.push_back({std::to_string(row.l), row.s_dim ? std::to_string(*row.s_dim) : "-", std::to_string(row.z_dim),
                      std::to_string(row.b_dim), std::to_string(row.closed_form), std::to_string(row.general),
                      row.agree ? "yes" : "no"});
  }
  s.tables.push_back(std::move(t));
  s.flag("all degrees agree", r.all_agree);

  auto& lemma = report.add_section("decomposition", "splitting of the cotangent differential");
  const bool split_ok = decomposition_lemma_holds(doc.algebra, 7, 3);
  lemma.flag("g-part and g*-part separate", split_ok);
  bool words_ok = true;
  for (int l = 2; l <= doc.algebra.depth() + 1; ++l) {
    const WordRelationCheck w = word_relation_check(doc.algebra, l);
    lemma.field("word relations, l=" + std::to_string(l),
                std::to_string(w.word_pairs) + " pairs, " + (w.all_hold ? "all hold" : "violated"));
    words_ok = words_ok && w.all_hold;
  }

  int status = kExitOk;
  if (doc.algebra.depth() == 1) {
    const DepthOneStructure d = depth_one_structure(doc.algebra, gram_g);
    auto& f = report.add_section("depth one", "H^1_1 and H^1_2 of t*(V + g0) from g0-module data");
    f.count("dim V", d.dim_v);
    f.count("dim g0", d.dim_g0);
    f.count("skew prolongation", d.skew_prolongation);
    f.count("symmetric prolongation", d.symmetric_prolongation);
    f.count("dim Hom(V, g0*)", d.hom_dim);
    f.count("rank mu*", d.mu_rank);
    f.count("invariant skew forms", d.invariant_skew);
    f.count("compatible symmetric forms", d.compatible_symmetric);
    f.count("compatible bilinear forms", d.compatible_bilinear);
    f.field("H^1_1 formula vs general", std::to_string(d.h1_1_formula) + " vs " + std::to_string(d.h1_1_general));
    f.field("H^1_2 formula vs general", std::to_string(d.h1_2_formula) + " vs " + std::to_string(d.h1_2_general));
    f.count("max H^1_l for l >= 3", d.h1_above_2_max);
    f.flag("H^1_1 formula holds", d.h1_1_holds);
    f.flag("H^1_2 formula holds", d.h1_2_holds);
    f.flag("vanishing for l >= 3", d.vanishing_holds);
    if (!(d.h1_1_holds && d.h1_2_holds && d.vanishing_holds)) {
      report.message = "depth-one structural formula does not match the computed cohomology";
      status = kExitMath;
    }
  }
  if (!r.all_agree || !split_ok || !words_ok) {
    report.message = "cotangent cohomology paths disagree";
    status = kExitInternal;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Lie algebra cohomology, admissible metrics and curvature normalization"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  if (const char* env = std::getenv("TANAKA_OUT_DIR")) opt.out_dir = env;
  app.add_flag("--json", opt.json, "Print the report as JSON");
  app.add_flag("--parallel", opt.parallel, "Compute independent blocks concurrently");
  app.add_option("--out-dir", opt.out_dir, "Directory for written files (default: $TANAKA_OUT_DIR or .)");

  std::string path, metric, name, grading = "standard", output, curvature;
  bool fundamental = false, no_exact = false;
  int k = 1, l_min = 1, l_max = 1, max_k = 4;

  auto* registry = app.add_subcommand("registry", "List or emit built-in algebras");
  registry->require_subcommand(1);
  registry->fallthrough();
  auto* reg_list = registry->add_subcommand("list", "List built-in algebras");
  auto* reg_emit = registry->add_subcommand("emit", "Print a built-in algebra document");
  reg_emit->add_option("name", name, "Algebra name, e.g. heis3 or t*(so2-V2)")->required();
  reg_emit->add_option("--metric", metric, "Embed a metric: identity or btheta");

  auto* validate_cmd = app.add_subcommand("validate", "Check the graded Lie algebra axioms of a document");
  validate_cmd->add_option("path", path, "Document path or registry:<name>")->required();
  validate_cmd->add_flag("--fundamental", fundamental, "Also require a fundamental gradation");
  validate_cmd->add_flag("--no-exact", no_exact, "With --fundamental, skip the exactness of the degree-0 action");

  auto* cohomology_cmd = app.add_subcommand("cohomology", "dim H^k_l by both computation paths");
  cohomology_cmd->add_option("path", path)->required();
  cohomology_cmd->add_option("--k", k, "Form degree")->capture_default_str();
  cohomology_cmd->add_option("--l-min", l_min, "First homogeneous degree")->capture_default_str();
  cohomology_cmd->add_option("--l-max", l_max, "Last homogeneous degree")->capture_default_str();
  cohomology_cmd->add_option("--metric", metric, "document, identity, btheta or random:<seed>");

  auto* admissible_cmd = app.add_subcommand("admissible", "Admissibility of a metric");
  admissible_cmd->add_option("path", path)->required();
  admissible_cmd->add_option("--metric", metric, "document, identity, btheta or random:<seed>");

  auto* cotangent_cmd = app.add_subcommand("cotangent", "Write the cotangent algebra document");
  cotangent_cmd->add_option("path", path)->required();
  cotangent_cmd->add_option("--grading", grading, "standard (non-positive input) or any")->capture_default_str();
  cotangent_cmd->add_option("--output", output, "File name inside the output directory");

  auto* prolong_cmd = app.add_subcommand("prolong", "Tanaka prolongation dimensions");
  prolong_cmd->add_option("path", path)->required();
  prolong_cmd->add_option("--max-k", max_k, "Highest level")->capture_default_str();

  auto* normalize_cmd = app.add_subcommand("normalize", "Normalize a formal curvature");
  normalize_cmd->add_option("path", path)->required();
  normalize_cmd->add_option("curvature", curvature, "Curvature file")->required();
  normalize_cmd->add_option("--metric", metric, "document, identity, btheta or random:<seed>");

  auto* ctg_cmd = app.add_subcommand("ctg-report", "Cohomology of t*(g) in closed form and in general");
  ctg_cmd->add_option("path", path)->required();
  ctg_cmd->add_option("--metric", metric, "Metric on g: document, identity, btheta or random:<seed>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  // The echo lists the subcommand and its own arguments; global flags are omitted.
  RunReport report;
  CLI::App* sub = app.get_subcommands().front();
  report.command.push_back(sub->get_name());
  CLI::App* leaf = sub;
  if (sub == registry) {
    leaf = sub->get_subcommands().front();
    report.command.push_back(leaf->get_name());
  }
  for (const CLI::Option* o : leaf->get_options()) {
    if (o->count() == 0 || o->get_name() == "--help") continue;
    const std::string label = o->get_lnames().empty() ? "" : "--" + o->get_lnames().front() + "=";
    for (const auto& r : o->results()) report.command.push_back(label + r);
  }

  PendingOutputs outputs;
  int status = kExitOk;
  try {
    if (leaf == reg_emit) {
      // Prints the bare document rather than a report.
      std::cout << emit_document(registry_document(name, metric));
      return kExitOk;
    }
    if (leaf == reg_list) {
      status = run_registry_list(report);
    } else {
      const AlgebraDocument doc = load_document(path, report);
      if (leaf == validate_cmd) {
        status = run_validate(doc, fundamental, !no_exact, report);
      } else if (leaf == cohomology_cmd) {
        status = run_cohomology(doc, metric, k, l_min, l_max, report);
      } else if (leaf == admissible_cmd) {
        status = run_admissible(doc, metric, opt.parallel, report);
      } else if (leaf == cotangent_cmd) {
        status = run_cotangent(doc, grading, output, report, outputs);
      } else if (leaf == prolong_cmd) {
        status = run_prolong(doc, max_k, report);
      } else if (leaf == normalize_cmd) {
        status = run_normalize(doc, metric, curvature, opt.parallel, report, outputs);
      } else if (leaf == ctg_cmd) {
        status = run_ctg_report(doc, metric, opt.parallel, report);
      }
    }
    if (status == kExitOk && !outputs.empty()) {
      outputs.commit(opt.out_dir.empty() ? fs::path(".") : fs::path(opt.out_dir));
      for (const auto& [file, content] : outputs.files()) report.outputs.push_back(file);
    }
  } catch (const Error& e) {
    status = exit_code_for(e.code());
    report.message = e.what();
  } catch (const UsageError& e) {
    status = kExitUsage;
    report.message = e.what();
  } catch (const std::exception& e) {
    status = kExitInternal;
    report.message = e.what();
  }
  report.exit_status = status;
  std::cout << (opt.json ? render_json(report) : render_text(report));
  if (status != kExitOk && !report.message.empty()) std::cerr << "error: " << report.message << '\n';
  return status;
}
