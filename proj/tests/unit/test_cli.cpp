#include "doctest.h"

#include "json.hpp"

#include "swalg/commands.hpp"

using namespace swalg;

namespace {

std::string config(const std::string& name) { return std::string(SWALG_TEST_DATA) + "/configs/" + name; }

CommandOutcome run(const std::string& command, const std::string& cfg, bool exact = false,
                   const std::string& format = "json") {
  CommandOptions o;
  o.command = command;
  o.config_path = config(cfg);
  o.exact = exact;
  o.format = format;
  return execute(o);
}

}  // namespace

TEST_CASE("verify exit codes") {
  CHECK(run("verify", "n3_relations.toml").exit_code == 0);
  const auto bad = run("verify", "n1_relations.toml");
  CHECK(bad.exit_code == 2);
  CHECK(bad.rendered.empty());
  CommandOptions o;
  o.command = "verify";
  o.config_path = config("n3_relations.toml");
  o.inject_fault = "B1";
  const auto f = execute(o);
  CHECK(f.exit_code == 1);
  CHECK(f.rendered.find("[H,B_i]") != std::string::npos);
}

TEST_CASE("derive report content") {
  const auto out = run("derive", "n3_default.toml", true);
  REQUIRE(out.exit_code == 0);
  const auto j = nlohmann::json::parse(out.rendered);
  CHECK(j["schema_version"] == "1.0");
  CHECK(j["command"] == "derive");
  CHECK(j["mode"] == "exact");
  CHECK(j["summary"]["failed"] == 0);
  CHECK_FALSE(j.contains("total_seconds"));
  CHECK(j["spectra"].is_array());
}

TEST_CASE("derive rejects b = 0") { CHECK(run("derive", "b_zero.toml").exit_code == 2); }

TEST_CASE("usage errors") {
  CHECK(run("verify", "n3_default.toml", false, "xml").exit_code == 2);
  CHECK(run("verify", "does_not_exist.toml").exit_code == 2);
  CHECK(run("frobnicate", "n3_default.toml").exit_code == 2);
}

TEST_CASE("reports are deterministic") {
  const auto a = run("derive", "n3_default.toml", false, "md");
  const auto b = run("derive", "n3_default.toml", false, "md");
  CHECK(a.exit_code == 0);
  CHECK(a.rendered == b.rendered);
  CHECK(a.rendered.rfind("# swalg derive", 0) == 0);
}

TEST_CASE("numcheck on a coarse grid") {
  const auto out = run("numcheck", "numcheck_coarse.toml");
  CHECK(out.exit_code == 0);
  const auto j = nlohmann::json::parse(out.rendered);
  CHECK(j["summary"]["failed"] == 0);
}
