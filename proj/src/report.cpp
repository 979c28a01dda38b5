#include "tanaka/report.hpp"

#include <openssl/evp.h>

#include <json.hpp>

#include <array>
#include <sstream>

#include "tanaka/error.hpp"

namespace tanaka {

ReportSection& ReportSection::field(std::string key, std::string value) {
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

ReportSection& ReportSection::flag(std::string key, bool value) { return field(std::move(key), value ? "true" : "false"); }

ReportSection& ReportSection::count(std::string key, std::size_t value) {
  return field(std::move(key), std::to_string(value));
}

ReportSection& RunReport::add_section(std::string title, std::string anchor) {
  sections.push_back(ReportSection{std::move(title), std::move(anchor), {}, {}});
  return sections.back();
}

void RunReport::add_input(std::string role, std::string source, std::string_view bytes) {
  inputs.push_back(InputDigest{std::move(role), std::move(source), sha256_hex(bytes)});
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kInternalInconsistency, "SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

namespace {

void render_table(std::ostringstream& os, const ReportTable& t) {
  std::vector<std::size_t> width(t.columns.size(), 0);
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    os << "    ";
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) os << "  ";
      os << cells[c];
      if (c + 1 < cells.size()) os << std::string(width[c] - cells[c].size(), ' ');
    }
    os << '\n';
  };
  os << "  table " << t.name << '\n';
  line(t.columns);
  for (const auto& row : t.rows) line(row);
}

}  // namespace

std::string render_text(const RunReport& report) {
  std::ostringstream os;
  os << "command:";
  for (const auto& a : report.command) os << ' ' << a;
  os << '\n';
  for (const auto& in : report.inputs) os << "input " << in.role << ": " << in.source << " sha256=" << in.sha256 << '\n';
  for (const auto& s : report.sections) {
    os << '\n' << "[" << s.title << "] " << s.anchor << '\n';
    for (const auto& [k, v] : s.fields) os << "  " << k << ": " << v << '\n';
    for (const auto& t : s.tables) render_table(os, t);
  }
  if (!report.outputs.empty()) {
    os << '\n';
    for (const auto& o : report.outputs) os << "wrote: " << o << '\n';
  }
  if (!report.message.empty()) os << '\n' << "message: " << report.message << '\n';
  os << "exit status: " << report.exit_status << '\n';
  return os.str();
}

std::string render_json(const RunReport& report) {
  using json = nlohmann::json;
  json out;
  out["command"] = report.command;
  json inputs = json::array();
  for (const auto& in : report.inputs) inputs.push_back({{"role", in.role}, {"source", in.source}, {"sha256", in.sha256}});
  out["inputs"] = std::move(inputs);
  json sections = json::array();
  for (const auto& s : report.sections) {
    json fields = json::array();
    for (const auto& [k, v] : s.fields) fields.push_back(json::array({k, v}));
    json tables = json::array();
    for (const auto& t : s.tables) tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
    sections.push_back({{"title", s.title}, {"anchor", s.anchor}, {"fields", std::move(fields)}, {"tables", std::move(tables)}});
  }
  out["sections"] = std::move(sections);
  out["outputs"] = report.outputs;
  out["exit_status"] = report.exit_status;
  out["message"] = report.message;
  return out.dump(2) + "\n";
}

}  // namespace tanaka
