#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "swalg/config.hpp"

namespace swalg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1.0";

enum class Status { Pass, Fail, Info };

struct CheckRecord {
  std::string suite;
  std::string name;
  std::vector<int> indices;
  Status status = Status::Pass;
  std::optional<double> value;      // residual or relative difference
  std::optional<double> tolerance;  // bound applied to value
  std::optional<std::size_t> terms; // size of a symbolic residual
  std::string note;
  double elapsed_seconds = 0;
};

// Rounds to `digits` significant decimal digits so reports do not depend on
// the last bits of a floating-point result.
double round_sig(double v, int digits = 12);

class Report {
 public:
  Report(std::string command, const RunConfig& config, bool exact_requested);

  void add(CheckRecord r) { checks_.push_back(std::move(r)); }
  void note(std::string n) { notes_.push_back(std::move(n)); }
  void set_section(const std::string& key, Json value) { sections_[key] = std::move(value); }
  void set_mode(std::string mode) { mode_ = std::move(mode); }

  std::size_t failures() const;
  int exit_code() const { return failures() == 0 ? 0 : 1; }
  const std::vector<CheckRecord>& checks() const { return checks_; }

  Json to_json(bool timings, double total_seconds = 0) const;
  std::string to_markdown(bool timings, double total_seconds = 0) const;

 private:
  std::string command_;
  Json config_;
  std::string mode_ = "float";
  std::vector<std::string> notes_;
  std::vector<CheckRecord> checks_;
  Json sections_ = Json::object();
};

const char* status_name(Status s);
std::string dump_json(const Json& j);

}  // namespace swalg
