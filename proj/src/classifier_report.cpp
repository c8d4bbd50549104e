#include <sstream>

#include <json.hpp>

#include "lowcohom/classifier.hpp"

namespace lowcohom {

namespace {

using json = nlohmann::ordered_json;

std::string series_group(SeriesKind k) {
  switch (k) {
    case SeriesKind::SO: return "SO(n)";
    case SeriesKind::SU: return "SU(n)";
    case SeriesKind::U: return "U(n)";
    case SeriesKind::Sp: return "Sp(n)";
    case SeriesKind::Sp1Sp: return "Sp(1)Sp(n)";
    case SeriesKind::U1Sp: return "U(1)Sp(n)";
  }
  return "?";
}

std::string group_label(const CandidateRow& row) {
  if (!row.series) return classical_name(row.fixed.group());
  return classical_name(row.fixed.group()) + " x " + series_group(*row.series);
}

std::string space_label(const CandidateRow& row) {
  std::string s = format_spec(row.fixed);
  if (row.series) s += " (x) standard rep of " + series_group(*row.series);
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_json(const ClassificationReport& report) {
  json j;
  j["window"] = {{"c_min", report.c_min}, {"c_max", report.c_max}, {"n_max", report.n_max}};
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row;
    row["cohomogeneity"] = r.cohom.lower;
    row["group"] = group_label(r);
    row["rep"] = json::parse(spec_to_json(r.representative()));
    row["fixed"] = format_spec(r.fixed);
    row["series"] = r.series ? json(to_string(*r.series)) : json(nullptr);
    row["condition"] = r.condition.to_string();
    row["cohom"] = {{"lower", r.cohom.lower}, {"upper", r.cohom.upper}, {"method", to_string(r.cohom.method)}};
    row["polar"] = r.polar;
    row["undetermined"] = r.undetermined;
    row["step"] = r.step;
    row["provenance"] = r.provenance;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["warnings"] = report.warnings;
  json diffs = json::array();
  for (const auto& d : report.diffs)
    diffs.push_back({{"target", d.target_c},
                     {"clean", d.clean()},
                     {"matched", d.matched.size()},
                     {"data_sourced", d.data_sourced},
                     {"missing", d.missing},
                     {"extra", d.extra}});
  j["diff"] = std::move(diffs);
  j["oracle_calls"] = report.oracle_calls;
  return j.dump(2) + "\n";
}

std::string report_csv(const ClassificationReport& report) {
  std::ostringstream out;
  out << "cohomogeneity,group,representation,series,condition,method,undetermined,step\n";
  for (const auto& r : report.rows)
    out << r.cohom.lower << ',' << csv_field(group_label(r)) << ',' << csv_field(format_spec(r.fixed)) << ','
        << (r.series ? to_string(*r.series) : "") << ',' << csv_field(r.condition.to_string()) << ','
        << to_string(r.cohom.method) << ',' << (r.undetermined ? "yes" : "no") << ',' << r.step << '\n';
  return out.str();
}

std::string report_markdown(const ClassificationReport& report) {
  std::ostringstream out;
  for (int c = report.c_min; c <= report.c_max; ++c) {
    out << "## Non-polar irreducible representations of cohomogeneity " << c << "\n\n";
    out << "| G | V | Condition | Method |\n|---|---|---|---|\n";
    for (const auto& r : report.rows)
      if (r.cohom.lower == c)
        out << "| " << group_label(r) << " | " << space_label(r) << " | " << r.condition.to_string() << " | "
            << to_string(r.cohom.method) << " |\n";
    out << '\n';
  }
  for (const auto& d : report.diffs) {
    out << "Comparison with the published table for c = " << d.target_c << ": " << d.matched.size() << " matched, "
        << d.missing.size() << " missing, " << d.extra.size() << " extra, " << d.data_sourced
        << " from embedded data.\n";
    for (const auto& m : d.missing) out << "- missing: " << m << '\n';
    for (const auto& e : d.extra) out << "- extra: " << e << '\n';
    out << '\n';
  }
  if (!report.warnings.empty()) {
    out << "Warnings:\n";
    for (const auto& w : report.warnings) out << "- " << w << '\n';
  }
  return out.str();
}

}  // namespace lowcohom
