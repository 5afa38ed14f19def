#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swalg/param_poly.hpp"
#include "swalg/spectrum.hpp"

namespace swalg {

// Invalid input: maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> s{"sw_relations", "substructures", "racah_chain", "su11",
                                          "casimirs",     "spectra",       "numeric"};
  return s;
}

struct GridSettings {
  int points = 4000;
  double x_min_scale = 1e-3;
  double x_max_scale = 12.0;
  int levels = 5;
};

struct Tolerances {
  double spectrum = 1e-12;
  double fd_relative = 1e-3;
  double residual = 1e-7;
  double ratio_min = 3.5;
  double ratio_max = 4.5;
  double rayleigh = 1e-6;
  double proportionality = 1e-8;
  int samples = 20;
};

struct RunConfig {
  int n = 0;
  std::vector<std::string> a_text;  // as written, for the report echo
  std::vector<long double> a;
  std::optional<std::vector<Rational>> a_exact;
  long double b = 0;
  std::string b_text;
  std::optional<Rational> b_exact;
  std::vector<std::vector<int>> branches;  // empty: all admitted branches
  std::vector<std::string> suites;         // empty: the command's defaults
  bool suites_given = false;
  int n_max = 8;
  int p_max = 8;
  GridSettings grid;
  Tolerances tol;
  std::vector<std::string> notes;  // defaults applied while loading

  ModelParams params() const;
  bool has_suite(const std::string& s) const;
};

// Parses a rational literal ("3", "-1/8", "0.25", "1e-3") exactly; nullopt for text
// that is not a plain decimal or fraction.
std::optional<Rational> parse_rational_literal(const std::string& text);

// Reads TOML; throws ConfigError on any invalid field. `n_override` replaces
// N and broadcasts a scalar `a`.
RunConfig load_config(const std::string& path, std::optional<int> n_override = std::nullopt);
RunConfig parse_config(const std::string& toml_text, std::optional<int> n_override = std::nullopt);

}  // namespace swalg
