#include "quermass/cli/report_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>

#include "quermass/core/errors.hpp"

namespace quermass {

using nlohmann::json;

namespace {

std::string real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json estimate_json(const Estimate& e) {
  json o;
  o["value"] = e.value;
  o["std_error"] = e.std_error;
  o["samples"] = e.samples;
  if (!e.is_exact()) o["seed"] = e.seed;
  o["provenance"] = e.is_exact() ? "closed-form" : "monte-carlo";
  return o;
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

std::string opt_int(int v) { return v >= 0 ? std::to_string(v) : ""; }

}  // namespace

ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  throw ValidationError("format must be json or csv, got '" + s + "'");
}

json report_to_json(const CheckReport& r, bool include_timing) {
  json o;
  o["check_id"] = r.check_id;
  o["body"] = r.body;
  json params;
  params["n"] = r.n;
  if (r.k >= 0) params["k"] = r.k;
  if (r.j >= 0) params["j"] = r.j;
  if (r.N >= 0) params["N"] = r.N;
  o["params"] = params;
  o["lower_bound"] = r.lower ? estimate_json(*r.lower) : json(nullptr);
  o["middle"] = estimate_json(r.middle);
  o["upper_bound"] = r.upper ? estimate_json(*r.upper) : json(nullptr);
  json constants = json::object();
  for (const NamedConstant& c : r.constants) constants[c.name] = estimate_json(c.value);
  o["constants"] = constants;
  o["margins"] = {{"lower", r.lower_margin ? json(*r.lower_margin) : json(nullptr)},
                  {"upper", r.upper_margin ? json(*r.upper_margin) : json(nullptr)}};
  o["verdict"] = verdict_label(r);
  if (!r.note.empty()) o["note"] = r.note;
  o["seed"] = r.seed;
  if (include_timing) o["wall_time"] = r.wall_time;
  if (!r.sub_checks.empty()) {
    json subs = json::array();
    for (const CheckReport& s : r.sub_checks) subs.push_back(report_to_json(s, include_timing));
    o["sub_checks"] = subs;
  }
  return o;
}

void write_csv(std::ostream& out, const std::vector<CheckReport>& reports, bool include_timing) {
  out << "check_id,body,n,k,j,N,lower,lower_sigma,middle,middle_sigma,upper,upper_sigma,margin_lower,margin_upper,"
         "verdict";
  if (include_timing) out << ",seconds";
  out << "\n";
  for (const CheckReport& r : reports) {
    out << csv_field(r.check_id) << ',' << csv_field(r.body) << ',' << r.n << ',' << opt_int(r.k) << ','
        << opt_int(r.j) << ',' << opt_int(r.N) << ',';
    out << (r.lower ? real(r.lower->value) : "") << ',' << (r.lower ? real(r.lower->std_error) : "") << ',';
    out << real(r.middle.value) << ',' << real(r.middle.std_error) << ',';
    out << (r.upper ? real(r.upper->value) : "") << ',' << (r.upper ? real(r.upper->std_error) : "") << ',';
    out << (r.lower_margin ? real(*r.lower_margin) : "") << ',' << (r.upper_margin ? real(*r.upper_margin) : "")
        << ',' << verdict_label(r);
    if (include_timing) out << ',' << real(r.wall_time);
    out << "\n";
  }
}

void write_json_lines(std::ostream& out, const std::vector<CheckReport>& reports, bool include_timing) {
  for (const CheckReport& r : reports) out << report_to_json(r, include_timing).dump() << "\n";
}

void write_reports(const std::string& path, ReportFormat format, const std::vector<CheckReport>& reports,
                   bool include_timing) {
  std::ofstream out(path);
  if (!out) throw ValidationError(path + ": cannot open report file for writing");
  if (format == ReportFormat::csv) {
    write_csv(out, reports, include_timing);
  } else {
    write_json_lines(out, reports, include_timing);
  }
}

void write_summary(std::ostream& out, const std::vector<CheckReport>& reports) {
  char line[256];
  std::snprintf(line, sizeof line, "%-18s %-16s %3s %3s %3s %3s %12s  %s\n", "check", "body", "n", "k", "j", "N",
                "min margin", "verdict");
  out << line;
  int counts[4] = {0, 0, 0, 0};
  for (const CheckReport& r : reports) {
    const std::optional<double> m = worst_margin(r);
    char margin[32] = "";
    if (m) std::snprintf(margin, sizeof margin, "%12.3g", *m);
    std::snprintf(line, sizeof line, "%-18s %-16s %3d %3s %3s %3s %12s  %s\n", r.check_id.c_str(), r.body.c_str(),
                  r.n, opt_int(r.k).c_str(), opt_int(r.j).c_str(), opt_int(r.N).c_str(), margin,
                  verdict_label(r).c_str());
    out << line;
    if (r.verdict == Verdict::error && !r.note.empty()) out << "    " << r.note << "\n";
    ++counts[static_cast<int>(r.verdict)];
  }
  out << reports.size() << " checks: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
      << " inconclusive, " << counts[3] << " error\n";
}

}  // namespace quermass
