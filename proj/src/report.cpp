#include "swalg/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace swalg {

namespace {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string join_indices(const std::vector<int>& idx) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s;
}

std::string escape_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string json_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_number(v.get<double>());
  return v.dump();
}

}  // namespace

double round_sig(double v, int digits) {
  if (!std::isfinite(v) || v == 0) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
  return std::strtod(buf, nullptr);
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "fail";
}

Report::Report(std::string command, const RunConfig& c, bool exact_requested) : command_(std::move(command)) {
  config_["n"] = c.n;
  config_["a"] = c.a_text;
  config_["b"] = c.b_text;
  Json branches = Json::array();
  for (const auto& br : c.branches) branches.push_back(br);
  config_["branches"] = branches;
  config_["suites"] = c.suites;
  config_["cutoffs"] = {{"n_max", c.n_max}, {"p_max", c.p_max}};
  config_["grid"] = {{"points", c.grid.points},
                     {"x_min_scale", round_sig(c.grid.x_min_scale)},
                     {"x_max_scale", round_sig(c.grid.x_max_scale)},
                     {"levels", c.grid.levels}};
  config_["tolerances"] = {{"spectrum", round_sig(c.tol.spectrum)},
                           {"fd_relative", round_sig(c.tol.fd_relative)},
                           {"residual", round_sig(c.tol.residual)},
                           {"ratio_min", round_sig(c.tol.ratio_min)},
                           {"ratio_max", round_sig(c.tol.ratio_max)},
                           {"rayleigh", round_sig(c.tol.rayleigh)},
                           {"proportionality", round_sig(c.tol.proportionality)},
                           {"samples", c.tol.samples}};
  config_["exact"] = exact_requested;
  notes_ = c.notes;
}

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& r : checks_) n += r.status == Status::Fail;
  return n;
}

Json Report::to_json(bool timings, double total_seconds) const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = {{"name", "swalg"}, {"version", kToolVersion}};
  j["command"] = command_;
  j["mode"] = mode_;
  j["config"] = config_;
  j["notes"] = notes_;
  Json checks = Json::array();
  std::size_t passed = 0, info = 0;
  for (const auto& r : checks_) {
    Json c;
    c["suite"] = r.suite;
    c["name"] = r.name;
    c["indices"] = r.indices;
    c["status"] = status_name(r.status);
    if (r.value) c["value"] = round_sig(*r.value);
    if (r.tolerance) c["tolerance"] = round_sig(*r.tolerance);
    if (r.terms) c["residual_terms"] = *r.terms;
    if (!r.note.empty()) c["note"] = r.note;
    if (timings) c["elapsed_seconds"] = round_sig(r.elapsed_seconds, 6);
    checks.push_back(std::move(c));
    passed += r.status == Status::Pass;
    info += r.status == Status::Info;
  }
  j["checks"] = std::move(checks);
  for (const auto& [key, value] : sections_.items()) j[key] = value;
  j["summary"] = {{"total", checks_.size()},
                  {"passed", passed},
                  {"failed", failures()},
                  {"informational", info},
                  {"status", failures() == 0 ? "pass" : "fail"}};
  if (timings) j["total_seconds"] = round_sig(total_seconds, 6);
  return j;
}

std::string Report::to_markdown(bool timings, double total_seconds) const {
  std::ostringstream os;
  const Json j = to_json(timings, total_seconds);
  const auto& s = j["summary"];
  os << "# swalg " << command_ << "\n\n";
  os << "Status: **" << s["status"].get<std::string>() << "** (" << s["passed"] << " passed, " << s["failed"]
     << " failed, " << s["informational"] << " informational; " << mode_ << " arithmetic)\n\n";
  os << "## Configuration\n\n| key | value |\n|---|---|\n";
  for (const auto& [key, value] : config_.items()) os << "| " << key << " | " << escape_cell(value.dump()) << " |\n";
  if (!notes_.empty()) {
    os << "\n## Notes\n\n";
    for (const auto& n : notes_) os << "- " << n << "\n";
  }
  os << "\n## Checks\n\n| suite | check | indices | status | value | tolerance | note |\n|---|---|---|---|---|---|---|\n";
  for (const auto& r : checks_) {
    std::string value;
    if (r.terms) value = std::to_string(*r.terms) + " terms";
    else if (r.value) value = format_number(*r.value);
    os << "| " << r.suite << " | " << escape_cell(r.name) << " | " << join_indices(r.indices) << " | "
       << status_name(r.status) << " | " << value << " | " << (r.tolerance ? format_number(*r.tolerance) : "") << " | "
       << escape_cell(r.note) << " |\n";
  }
  for (const auto& [key, value] : sections_.items()) {
    os << "\n## " << key << "\n";
    if (!value.is_array()) {
      os << "\n```json\n" << value.dump(2) << "\n```\n";
      continue;
    }
    for (const auto& item : value) {
      os << "\n";
      for (const auto& [k, v] : item.items())
        if (!v.is_array()) os << "- " << k << ": " << json_cell(v) << "\n";
      for (const auto& [k, v] : item.items()) {
        if (!v.is_array() || v.empty()) continue;
        if (!v.front().is_object()) {
          os << "- " << k << ": " << v.dump() << "\n";
          continue;
        }
        os << "\n" << k << ":\n\n|";
        for (const auto& [col, _] : v.front().items()) os << " " << col << " |";
        os << "\n|";
        for (std::size_t c = 0; c < v.front().size(); ++c) os << "---|";
        os << "\n";
        for (const auto& row : v) {
          os << "|";
          for (const auto& [_, cell] : row.items()) os << " " << escape_cell(json_cell(cell)) << " |";
          os << "\n";
        }
      }
    }
  }
  if (timings) os << "\nTotal time: " << format_number(total_seconds) << " s\n";
  return os.str();
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace swalg
