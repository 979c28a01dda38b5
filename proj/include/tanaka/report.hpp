#pragma once

#include <deque>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tanaka {

struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct ReportSection {
  std::string title;
  /// Names the quantity being computed, e.g. "cotangent H^1 closed form, l=2".
  std::string anchor;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<ReportTable> tables;

  ReportSection& field(std::string key, std::string value);
  ReportSection& flag(std::string key, bool value);
  ReportSection& count(std::string key, std::size_t value);
};

struct InputDigest {
  std::string role;
  std::string source;  // file path or "registry:<name>"
  std::string sha256;  // hex digest of the exact bytes consumed
};

/// Everything a command reports. The text and JSON renderings carry the same data;
/// neither includes timings, host details or execution-only flags.
struct RunReport {
  std::vector<std::string> command;
  std::vector<InputDigest> inputs;
  std::deque<ReportSection> sections;  // references from add_section stay valid
  std::vector<std::string> outputs;  // files written, in write order
  int exit_status = 0;
  std::string message;

  ReportSection& add_section(std::string title, std::string anchor);
  void add_input(std::string role, std::string source, std::string_view bytes);
};

std::string sha256_hex(std::string_view bytes);

std::string render_text(const RunReport& report);
/// Sorted keys, two-space indent, trailing newline.
std::string render_json(const RunReport& report);

}  // namespace tanaka
