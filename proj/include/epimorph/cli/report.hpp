#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epimorph/analysis.hpp"

namespace epimorph::cli {

enum class Format { table, csv, jsonl };

Format parse_format(std::string_view text);

/// Rows are per-checkpoint or per-n records; every row has a depth column.
struct Report {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;

  void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
  void add_verdict(Verdict v) { verdicts.push_back(std::move(v)); }
  /// Appends the rows and verdicts of `other` (columns must agree).
  void absorb(Report other);
  bool passed() const noexcept;
};

/// A verdict built from a plain condition.
Verdict verdict(std::string check, std::string parameters, std::size_t depth, bool ok, std::string detail = {});

void write_report(std::ostream& os, const Report& report, Format format);

}  // namespace epimorph::cli
