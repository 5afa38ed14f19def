#include "swalg/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <regex>
#include <sstream>

#include "toml.hpp"

namespace swalg {

namespace {

std::string shortest(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

struct Scalar {
  std::string text;
  long double value = 0;
  std::optional<Rational> exact;
};

Scalar read_scalar(const toml::node& node, const std::string& what) {
  Scalar s;
  if (auto v = node.value_exact<int64_t>()) {
    s.text = std::to_string(*v);
  } else if (auto d = node.value_exact<double>()) {
    if (!std::isfinite(*d)) throw ConfigError(what + " must be finite");
    s.text = shortest(*d);
  } else if (auto t = node.value_exact<std::string>()) {
    s.text = *t;
  } else {
    throw ConfigError(what + " must be a number or a rational string");
  }
  s.exact = parse_rational_literal(s.text);
  if (s.exact) {
    s.value = to_long_double(*s.exact);
  } else {
    try {
      std::size_t used = 0;
      s.value = std::stold(s.text, &used);
      if (used != s.text.size()) throw ConfigError(what + ": cannot parse '" + s.text + "'");
    } catch (const std::logic_error&) {
      throw ConfigError(what + ": cannot parse '" + s.text + "'");
    }
  }
  return s;
}

template <class T>
T read_int(const toml::node_view<const toml::node>& v, T fallback, const std::string& what) {
  if (!v) return fallback;
  auto x = v.value_exact<int64_t>();
  if (!x) throw ConfigError(what + " must be an integer");
  return static_cast<T>(*x);
}

double read_double(const toml::node_view<const toml::node>& v, double fallback, const std::string& what) {
  if (!v) return fallback;
  if (auto i = v.value_exact<int64_t>()) return static_cast<double>(*i);
  if (auto d = v.value_exact<double>()) return *d;
  throw ConfigError(what + " must be a number");
}

void reject_unknown(const toml::table& t, const std::vector<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : t)
    if (std::find(allowed.begin(), allowed.end(), std::string(key.str())) == allowed.end())
      throw ConfigError("unknown key '" + std::string(key.str()) + "' in " + where);
}

RunConfig from_table(const toml::table& root, std::optional<int> n_override) {
  reject_unknown(root, {"n", "a", "b", "s", "branches", "suites", "cutoffs", "grid", "tolerances"}, "config");
  RunConfig c;
  c.n = read_int<int>(root["n"], 0, "n");
  if (n_override) c.n = *n_override;
  if (c.n < 1) throw ConfigError("n must be at least 1");
  if (c.n > 12) throw ConfigError("n must be at most 12");

  const toml::node* a_node = root.get("a");
  if (!a_node) throw ConfigError("a is required");
  std::vector<Scalar> a_vals;
  if (const auto* arr = a_node->as_array()) {
    for (const auto& el : *arr) a_vals.push_back(read_scalar(el, "a"));
    if (a_vals.size() == 1) a_vals.assign(c.n, a_vals.front());
  } else {
    a_vals.assign(c.n, read_scalar(*a_node, "a"));
  }
  if (static_cast<int>(a_vals.size()) != c.n)
    throw ConfigError("a has " + std::to_string(a_vals.size()) + " entries but n = " + std::to_string(c.n));
  bool all_exact = true;
  std::vector<Rational> exact;
  for (const auto& s : a_vals) {
    c.a_text.push_back(s.text);
    c.a.push_back(s.value);
    if (1 + 8 * s.value < 0) throw ConfigError("a_i must satisfy 1 + 8 a_i >= 0 (got " + s.text + ")");
    if (s.exact)
      exact.push_back(*s.exact);
    else
      all_exact = false;
  }
  if (all_exact) c.a_exact = exact;

  const toml::node* b_node = root.get("b");
  const toml::node* s_node = root.get("s");
  if (b_node && s_node) throw ConfigError("give either b or s, not both");
  if (b_node) {
    const Scalar s = read_scalar(*b_node, "b");
    c.b_text = s.text;
    c.b = s.value;
    c.b_exact = s.exact;
  } else if (s_node) {
    const Scalar s = read_scalar(*s_node, "s");
    if (!(s.value > 0)) throw ConfigError("s must be positive");
    c.b = s.value * s.value / 2;
    if (s.exact) {
      c.b_exact = *s.exact * *s.exact / 2;
      c.b_text = to_string(*c.b_exact);
    } else {
      c.b_text = shortest(static_cast<double>(c.b));
    }
  } else {
    throw ConfigError("b (or s) is required");
  }
  if (!(c.b > 0)) throw ConfigError("b must be positive");

  if (const auto* arr = root.get_as<toml::array>("suites")) {
    c.suites_given = true;
    for (const auto& el : *arr) {
      auto s = el.value_exact<std::string>();
      if (!s) throw ConfigError("suites must be strings");
      if (std::find(known_suites().begin(), known_suites().end(), *s) == known_suites().end())
        throw ConfigError("unknown suite '" + *s + "'");
      if (std::find(c.suites.begin(), c.suites.end(), *s) == c.suites.end()) c.suites.push_back(*s);
    }
    if (c.suites.empty()) throw ConfigError("suites must not be empty");
  } else if (root.contains("suites")) {
    throw ConfigError("suites must be an array");
  }

  const ModelParams p = c.params();
  const auto admitted = admitted_branches(p);
  if (const auto* arr = root.get_as<toml::array>("branches")) {
    for (const auto& row : *arr) {
      const auto* r = row.as_array();
      if (!r) throw ConfigError("branches must be an array of arrays");
      std::vector<int> br;
      for (const auto& e : *r) {
        auto v = e.value_exact<int64_t>();
        if (!v || (*v != 1 && *v != -1)) throw ConfigError("branch signs must be +1 or -1");
        br.push_back(static_cast<int>(*v));
      }
      if (static_cast<int>(br.size()) != c.n) throw ConfigError("each branch needs n signs");
      if (std::find(admitted.begin(), admitted.end(), br) == admitted.end())
        throw ConfigError("branch not admitted: -1 needs -1/8 < a_i < 3/8");
      c.branches.push_back(br);
    }
    if (c.branches.empty()) throw ConfigError("branches must not be empty");
  } else {
    c.notes.push_back("branches not given; using all admitted branches");
  }

  if (const auto* t = root.get_as<toml::table>("cutoffs")) {
    reject_unknown(*t, {"n_max", "p_max"}, "cutoffs");
    const toml::node_view<const toml::node> v{t};
    c.n_max = read_int<int>(v["n_max"], c.n_max, "cutoffs.n_max");
    c.p_max = read_int<int>(v["p_max"], c.p_max, "cutoffs.p_max");
  } else {
    c.notes.push_back("cutoffs not given; using n_max = 8, p_max = 8");
  }
  if (c.n_max < 0 || c.n_max > 40) throw ConfigError("n_max must be in 0..40");
  if (c.p_max < 0 || c.p_max > 64) throw ConfigError("p_max must be in 0..64");

  if (const auto* t = root.get_as<toml::table>("grid")) {
    reject_unknown(*t, {"points", "x_min_scale", "x_max_scale", "levels"}, "grid");
    const toml::node_view<const toml::node> v{t};
    c.grid.points = read_int<int>(v["points"], c.grid.points, "grid.points");
    c.grid.x_min_scale = read_double(v["x_min_scale"], c.grid.x_min_scale, "grid.x_min_scale");
    c.grid.x_max_scale = read_double(v["x_max_scale"], c.grid.x_max_scale, "grid.x_max_scale");
    c.grid.levels = read_int<int>(v["levels"], c.grid.levels, "grid.levels");
  } else {
    c.notes.push_back("grid not given; using 4000 points on [1e-3, 12] (2b)^(-1/4), 5 levels");
  }
  if (c.grid.points < 9) throw ConfigError("grid.points must be at least 9");
  if (!(c.grid.x_min_scale > 0) || !(c.grid.x_max_scale > c.grid.x_min_scale))
    throw ConfigError("grid needs 0 < x_min_scale < x_max_scale");
  if (c.grid.levels < 1 || c.grid.levels >= c.grid.points / 2) throw ConfigError("grid.levels out of range");

  if (const auto* t = root.get_as<toml::table>("tolerances")) {
    reject_unknown(*t,
                   {"spectrum", "fd_relative", "residual", "ratio_min", "ratio_max", "rayleigh", "proportionality",
                    "samples"},
                   "tolerances");
    const toml::node_view<const toml::node> v{t};
    auto& tol = c.tol;
    tol.spectrum = read_double(v["spectrum"], tol.spectrum, "tolerances.spectrum");
    tol.fd_relative = read_double(v["fd_relative"], tol.fd_relative, "tolerances.fd_relative");
    tol.residual = read_double(v["residual"], tol.residual, "tolerances.residual");
    tol.ratio_min = read_double(v["ratio_min"], tol.ratio_min, "tolerances.ratio_min");
    tol.ratio_max = read_double(v["ratio_max"], tol.ratio_max, "tolerances.ratio_max");
    tol.rayleigh = read_double(v["rayleigh"], tol.rayleigh, "tolerances.rayleigh");
    tol.proportionality = read_double(v["proportionality"], tol.proportionality, "tolerances.proportionality");
    tol.samples = read_int<int>(v["samples"], tol.samples, "tolerances.samples");
    if (tol.samples < 1) throw ConfigError("tolerances.samples must be positive");
    for (double x : {tol.spectrum, tol.fd_relative, tol.residual, tol.rayleigh, tol.proportionality})
      if (!(x > 0)) throw ConfigError("tolerances must be positive");
    if (!(tol.ratio_min < tol.ratio_max)) throw ConfigError("tolerances need ratio_min < ratio_max");
  } else {
    c.notes.push_back("tolerances not given; using defaults");
  }
  return c;
}

}  // namespace

std::optional<Rational> parse_rational_literal(const std::string& text) {
  static const std::regex frac(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
  static const std::regex dec(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, frac)) {
    Rational r(mpz_class(m[1].str(), 10), mpz_class(m[2].str(), 10));
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
  }
  if (std::regex_match(text, m, dec)) {
    const std::string whole = m[2].str(), fraction = m[3].str();
    if (whole.empty() && fraction.empty()) return std::nullopt;
    mpz_class num(whole + fraction, 10);
    mpz_class den = 1;
    for (std::size_t k = 0; k < fraction.size(); ++k) den *= 10;
    long exp10 = m[4].matched ? std::stol(m[4].str()) : 0;
    if (exp10 > 400 || exp10 < -400) return std::nullopt;
    for (long k = 0; k < std::labs(exp10); ++k) (exp10 > 0 ? num : den) *= 10;
    Rational r(num, den);
    r.canonicalize();
    if (m[1].str() == "-") r = -r;
    return r;
  }
  return std::nullopt;
}

ModelParams RunConfig::params() const {
  ModelParams p;
  p.n = n;
  p.a = a;
  p.b = b;
  p.a_exact = a_exact;
  p.b_exact = b_exact;
  return p;
}

bool RunConfig::has_suite(const std::string& s) const {
  return std::find(suites.begin(), suites.end(), s) != suites.end();
}

RunConfig parse_config(const std::string& toml_text, std::optional<int> n_override) {
  try {
    const toml::table root = toml::parse(toml_text);
    return from_table(root, n_override);
  } catch (const toml::parse_error& e) {
    std::ostringstream os;
    os << "config is not valid TOML: " << e.description() << " at line " << e.source().begin.line;
    throw ConfigError(os.str());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

RunConfig load_config(const std::string& path, std::optional<int> n_override) {
  try {
    const toml::table root = toml::parse_file(path);
    return from_table(root, n_override);
  } catch (const toml::parse_error& e) {
    std::ostringstream os;
    os << "cannot read config '" << path << "': " << e.description();
    throw ConfigError(os.str());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace swalg
