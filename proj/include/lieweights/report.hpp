#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lieweights/rootdata.hpp"
#include "lieweights/series.hpp"
#include "lieweights/weights.hpp"

namespace lieweights {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Markdown };

inline std::optional<Format> parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "markdown" || text == "md") return Format::Markdown;
  return std::nullopt;
}

/// Integers that fit in 64 bits become JSON numbers; larger ones become
/// decimal strings so nothing is rounded through a double.
inline Json to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
    return value.convert_to<std::uint64_t>();
  return value.str();
}

inline Json to_json(const WeightReport& r, bool include_classes) {
  Json j;
  if (r.verdict == Verdict::Unsupported && r.per_class.empty())
    j["total"] = nullptr;
  else
    j["total"] = to_json(r.total_weights);
  j["irr_w"] = to_json(r.irr_w);
  j["verdict"] = std::string(to_string(r.verdict));
  j["group"] = display_name(r.spec);
  j["family"] = std::string(family_tag(r.spec.family()));
  j["rank"] = r.spec.rank();
  j["prime"] = r.ell;
  j["method"] = std::string(to_string(r.method));
  if (r.enumeration_total) j["enumeration_total"] = to_json(*r.enumeration_total);
  if (r.generating_function_total)
    j["generating_function_total"] = to_json(*r.generating_function_total);
  if (r.enumeration_total && r.generating_function_total)
    j["methods_agree"] = r.methods_agree();
  j["class_count"] = r.per_class.size();
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (include_classes) {
    Json rows = Json::array();
    for (const auto& c : r.per_class) {
      Json row;
      row["label"] = c.label;
      row["automizer"] = c.automizer;
      row["contribution"] = to_json(c.contribution);
      if (!c.provenance.empty()) row["provenance"] = c.provenance;
      rows.push_back(std::move(row));
    }
    j["classes"] = std::move(rows);
  }
  return j;
}

/// Pretty-printed JSON with a trailing newline.
inline std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string md_cell(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace detail

/// Per-class table for a single report.
inline std::string render_classes(const WeightReport& r, Format format) {
  std::ostringstream os;
  if (format == Format::Json) return render_json(to_json(r, true));
  if (format == Format::Csv) {
    os << "label,automizer,contribution\n";
    for (const auto& c : r.per_class)
      os << detail::csv_field(c.label) << ',' << detail::csv_field(c.automizer) << ','
         << c.contribution << '\n';
    return os.str();
  }
  os << "| label | automizer | contribution |\n|---|---|---|\n";
  for (const auto& c : r.per_class)
    os << "| " << detail::md_cell(c.label) << " | " << detail::md_cell(c.automizer) << " | "
       << c.contribution << " |\n";
  return os.str();
}

/// A single report: summary plus, optionally, the class table.
inline std::string render_report(const WeightReport& r, Format format, bool include_classes) {
  if (format == Format::Json) return render_json(to_json(r, include_classes));
  std::ostringstream os;
  const std::string total =
      (r.verdict == Verdict::Unsupported && r.per_class.empty()) ? "" : r.total_weights.str();
  if (format == Format::Csv) {
    os << "group,prime,method,total,irr_w,verdict,classes\n"
       << display_name(r.spec) << ',' << r.ell << ',' << to_string(r.method) << ',' << total
       << ',' << r.irr_w << ',' << to_string(r.verdict) << ',' << r.per_class.size() << '\n';
  } else {
    os << "| group | prime | method | total | irr_w | verdict | classes |\n"
       << "|---|---|---|---|---|---|---|\n"
       << "| " << display_name(r.spec) << " | " << r.ell << " | " << to_string(r.method)
       << " | " << total << " | " << r.irr_w << " | " << to_string(r.verdict) << " | "
       << r.per_class.size() << " |\n";
  }
  if (!r.reason.empty()) os << (format == Format::Csv ? "# " : "\n> ") << r.reason << '\n';
  if (include_classes) os << '\n' << render_classes(r, format);
  return os.str();
}

// Sweeps ---------------------------------------------------------------------

/// One (family, rank, prime) cell of a verification sweep.
struct SweepRow {
  WeightReport report;
  Verdict expected;
  double runtime_ms = 0;

  bool ok() const { return report.methods_agree() && report.verdict == expected; }
};

struct SweepMeta {
  std::vector<Family> families;
  unsigned max_rank;
  std::vector<unsigned> primes;
  bool lift_exclusions = false;
  bool timings = false;
};

inline bool sweep_ok(const std::vector<SweepRow>& rows) {
  for (const auto& r : rows)
    if (!r.ok()) return false;
  return true;
}

inline Json sweep_to_json(const SweepMeta& meta, const std::vector<SweepRow>& rows,
                          bool include_classes) {
  Json j;
  Json m;
  Json fams = Json::array();
  for (Family f : meta.families) fams.push_back(std::string(family_tag(f)));
  m["families"] = std::move(fams);
  m["max_rank"] = meta.max_rank;
  m["primes"] = meta.primes;
  m["lift_exclusions"] = meta.lift_exclusions;
  m["timings"] = meta.timings;
  j["meta"] = std::move(m);
  Json out_rows = Json::array();
  for (const auto& row : rows) {
    Json r = to_json(row.report, include_classes);
    r["expected_verdict"] = std::string(to_string(row.expected));
    r["ok"] = row.ok();
    if (meta.timings) r["runtime_ms"] = row.runtime_ms;
    out_rows.push_back(std::move(r));
  }
  j["rows"] = std::move(out_rows);
  j["all_ok"] = sweep_ok(rows);
  return j;
}

/// Fixed CSV layout, one line per (cell, method) with a trailing status
/// column. runtime_ms is 0 unless timings were requested.
inline std::string sweep_to_csv(const SweepMeta& meta, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "family,rank,prime,method,total,irr_w,verdict,classes,runtime_ms,status\n";
  for (const auto& row : rows) {
    const WeightReport& r = row.report;
    const std::string status = row.ok() ? "ok" : "MISMATCH";
    const std::string runtime =
        meta.timings ? std::to_string(static_cast<long long>(row.runtime_ms)) : "0";
    auto line = [&](Method method, const std::string& total) {
      os << family_tag(r.spec.family()) << ',' << r.spec.rank() << ',' << r.ell << ','
         << to_string(method) << ',' << total << ',' << r.irr_w << ','
         << to_string(r.verdict) << ',' << r.per_class.size() << ',' << runtime << ','
         << status << '\n';
    };
    if (r.enumeration_total && r.generating_function_total) {
      line(Method::Enumeration, r.enumeration_total->str());
      line(Method::GeneratingFunction, r.generating_function_total->str());
    } else {
      const bool has_total = !(r.verdict == Verdict::Unsupported && r.per_class.empty());
      line(r.method, has_total ? r.total_weights.str() : "");
    }
  }
  return os.str();
}

inline std::string sweep_to_markdown(const SweepMeta& meta, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "| family | rank | prime | enumeration | generating function | irr_w | verdict | "
        "expected | status |";
  if (meta.timings) os << " runtime_ms |";
  os << "\n|---|---|---|---|---|---|---|---|---|";
  if (meta.timings) os << "---|";
  os << '\n';
  for (const auto& row : rows) {
    const WeightReport& r = row.report;
    const bool has_total = !(r.verdict == Verdict::Unsupported && r.per_class.empty());
    std::string enum_total = r.enumeration_total ? r.enumeration_total->str()
                             : has_total         ? r.total_weights.str()
                                                 : "";
    std::string gf_total = r.generating_function_total ? r.generating_function_total->str() : "";
    os << "| " << family_tag(r.spec.family()) << " | " << r.spec.rank() << " | " << r.ell
       << " | " << enum_total << " | " << gf_total << " | " << r.irr_w << " | "
       << to_string(r.verdict) << " | " << to_string(row.expected) << " | "
       << (row.ok() ? "ok" : "MISMATCH") << " |";
    if (meta.timings) os << ' ' << static_cast<long long>(row.runtime_ms) << " |";
    os << '\n';
  }
  return os.str();
}

}  // namespace lieweights
