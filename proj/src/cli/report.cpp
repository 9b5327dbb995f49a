#include "epimorph/cli/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "epimorph/error.hpp"

namespace epimorph::cli {

namespace {

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json cell_value(const std::string& s) {
  const bool numeric = !s.empty() && s.size() < 19 &&
                       std::all_of(s.begin() + (s[0] == '-' && s.size() > 1), s.end(),
                                   [](char c) { return c >= '0' && c <= '9'; });
  if (numeric) return std::stoll(s);
  return s;
}

std::string counterexample_text(const Verdict& v) {
  if (!v.counterexample) return {};
  return v.counterexample->empty() ? "ε" : v.counterexample->str();
}

nlohmann::ordered_json verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["type"] = "verdict";
  j["check"] = v.check;
  j["parameters"] = v.parameters;
  j["depth"] = v.depth;
  j["verdict"] = std::string(to_string(v.outcome));
  if (v.counterexample) j["counterexample"] = counterexample_text(v);
  if (!v.detail.empty()) j["detail"] = v.detail;
  j["truncated"] = v.truncated;
  return j;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "table") return Format::table;
  if (text == "csv") return Format::csv;
  if (text == "jsonl") return Format::jsonl;
  throw Error(ErrorKind::parse_error, "unknown format '" + std::string(text) + "' (table, csv, jsonl)");
}

void Report::absorb(Report other) {
  if (columns.empty()) columns = other.columns;
  for (auto& r : other.rows) rows.push_back(std::move(r));
  for (auto& v : other.verdicts) verdicts.push_back(std::move(v));
  for (auto& n : other.notes) notes.push_back(std::move(n));
}

bool Report::passed() const noexcept {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed(); });
}

Verdict verdict(std::string check, std::string parameters, std::size_t depth, bool ok, std::string detail) {
  Verdict v;
  v.check = std::move(check);
  v.parameters = std::move(parameters);
  v.depth = depth;
  v.outcome = ok ? Outcome::pass : Outcome::fail;
  v.detail = std::move(detail);
  return v;
}

void write_report(std::ostream& os, const Report& report, Format format) {
  switch (format) {
    case Format::table: {
      os << "# experiment: " << report.experiment << "\n";
      for (const auto& [k, v] : report.config) os << "# " << k << " = " << v << "\n";
      if (!report.columns.empty() && !report.rows.empty()) {
        std::vector<std::size_t> width(report.columns.size());
        for (std::size_t c = 0; c < width.size(); ++c) width[c] = display_width(report.columns[c]);
        for (const auto& row : report.rows)
          for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], display_width(row[c]));
        auto line = [&](const std::vector<std::string>& cells) {
          for (std::size_t c = 0; c < cells.size(); ++c) {
            os << (c ? "  " : "") << cells[c];
            if (c + 1 < cells.size()) os << std::string(width[c] - display_width(cells[c]), ' ');
          }
          os << "\n";
        };
        line(report.columns);
        for (const auto& row : report.rows) line(row);
      }
      for (const auto& v : report.verdicts) {
        os << to_string(v.outcome) << "  " << v.check;
        if (!v.parameters.empty()) os << "  [" << v.parameters << "]";
        os << "  depth=" << v.depth;
        if (v.counterexample) os << "  counterexample=" << counterexample_text(v);
        if (v.truncated) os << "  truncated";
        if (!v.detail.empty()) os << "  (" << v.detail << ")";
        os << "\n";
      }
      for (const auto& n : report.notes) os << "note: " << n << "\n";
      break;
    }
    case Format::csv: {
      if (!report.columns.empty()) {
        for (std::size_t c = 0; c < report.columns.size(); ++c) os << (c ? "," : "") << csv_cell(report.columns[c]);
        os << "\n";
        for (const auto& row : report.rows) {
          for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_cell(row[c]);
          os << "\n";
        }
      }
      if (!report.verdicts.empty()) {
        if (!report.columns.empty()) os << "\n";
        os << "check,parameters,depth,verdict,counterexample,truncated\n";
        for (const auto& v : report.verdicts) {
          os << csv_cell(v.check) << "," << csv_cell(v.parameters) << "," << v.depth << ","
             << to_string(v.outcome) << "," << csv_cell(counterexample_text(v)) << ","
             << (v.truncated ? "true" : "false") << "\n";
        }
      }
      break;
    }
    case Format::jsonl: {
      nlohmann::ordered_json head;
      head["type"] = "config";
      head["experiment"] = report.experiment;
      for (const auto& [k, v] : report.config) head[k] = v;
      os << head.dump() << "\n";
      for (const auto& row : report.rows) {
        nlohmann::ordered_json j;
        j["type"] = "row";
        for (std::size_t c = 0; c < row.size() && c < report.columns.size(); ++c) j[report.columns[c]] = cell_value(row[c]);
        os << j.dump() << "\n";
      }
      for (const auto& v : report.verdicts) os << verdict_json(v).dump() << "\n";
      for (const auto& n : report.notes) os << nlohmann::ordered_json{{"type", "note"}, {"text", n}}.dump() << "\n";
      break;
    }
  }
}

}  // namespace epimorph::cli
