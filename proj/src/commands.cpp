#include "swalg/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <set>

#include "CLI11.hpp"
#include "swalg/crosscheck.hpp"
#include "swalg/relations.hpp"
#include "swalg/spectral.hpp"

namespace swalg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool is_casimir_check(const std::string& name) {
  return name.find("casimir") != std::string::npos || name.find("[K") != std::string::npos;
}

CheckRecord from_relation(const std::string& suite, const RelationCheck& r) {
  CheckRecord c;
  c.suite = suite;
  c.name = r.name;
  c.indices = r.indices;
  c.status = r.informational ? Status::Info : (r.passed ? Status::Pass : Status::Fail);
  c.terms = r.term_count;
  c.note = r.note;
  c.elapsed_seconds = r.elapsed_seconds;
  return c;
}

CheckRecord bounded(const std::string& suite, std::string name, std::vector<int> indices, double value,
                    double tolerance, std::string note = {}) {
  CheckRecord c;
  c.suite = suite;
  c.name = std::move(name);
  c.indices = std::move(indices);
  c.value = value;
  c.tolerance = tolerance;
  c.status = value <= tolerance ? Status::Pass : Status::Fail;
  c.note = std::move(note);
  return c;
}

std::string branch_label(const std::vector<int>& br) {
  std::string s = "(";
  for (std::size_t k = 0; k < br.size(); ++k) s += std::string(k ? "," : "") + (br[k] > 0 ? "+" : "-");
  return s + ")";
}

std::vector<std::vector<int>> branches_for(const RunConfig& c) {
  return c.branches.empty() ? admitted_branches(c.params()) : c.branches;
}

std::vector<std::string> selected(const RunConfig& c, const std::vector<std::string>& family, Report& report,
                                  const std::string& command) {
  if (!c.suites_given) {
    std::string list;
    for (const auto& s : family) list += (list.empty() ? "" : ", ") + s;
    report.note("suites not given; running " + list);
    return family;
  }
  std::vector<std::string> out;
  for (const auto& s : family)
    if (c.has_suite(s)) out.push_back(s);
  if (out.empty()) throw ConfigError("no suite in the config applies to '" + command + "'");
  return out;
}

// --- verify ----------------------------------------------------------------

void add_relations(Report& report, const std::string& suite, const std::vector<RelationCheck>& checks,
                   bool want_family, bool want_casimirs) {
  for (const auto& r : checks) {
    const bool casimir = is_casimir_check(r.name);
    if (casimir && want_casimirs) report.add(from_relation("casimirs", r));
    if (!casimir && want_family) report.add(from_relation(suite, r));
  }
}

// --- derive ----------------------------------------------------------------

template <class T>
double to_d(const T& v) {
  return static_cast<double>(as_long_double(v));
}

template <class T>
Json energy_json(const T& e) {
  return round_sig(to_d(e));
}

template <class T>
void derive_branch(const Model<T>& m, const RunConfig& c, Report& report, Json& tables, bool cross_checks) {
  const std::string suite = "spectra";
  const bool exact = std::is_same_v<T, Rational>;
  const double tol = exact ? 0.0 : c.tol.spectrum;
  const std::string label = branch_label(m.branch);
  const std::vector<int> br = m.branch;
  auto t0 = Clock::now();

  const auto levels = spectrum_cartesian(m, c.n_max);
  // Enumerated tuples per level must match the binomial multiplicity and share
  // one energy.
  std::vector<unsigned long long> counted(levels.size(), 0);
  bool degeneracy_ok = true;
  for_each_tuple(m.n, c.n_max, [&](const std::vector<int>& q) {
    int tot = 0;
    for (int v : q) tot += v;
    ++counted[tot];
    degeneracy_ok = degeneracy_ok && close_rel(cartesian_energy(m, q), levels[tot].energy, 1e-15L);
  });
  Json rows = Json::array();
  for (const auto& lv : levels) {
    Json row;
    row["n"] = lv.total;
    row["energy"] = energy_json(lv.energy);
    if constexpr (std::is_same_v<T, Rational>) row["energy_exact"] = to_string(lv.energy);
    row["degeneracy"] = lv.multiplicity;
    rows.push_back(row);
    degeneracy_ok = degeneracy_ok && counted[lv.total] == lv.multiplicity;
  }
  Json table;
  table["branch"] = br;
  table["levels"] = rows;
  {
    CheckRecord d;
    d.suite = suite;
    d.name = "level degeneracy: enumeration vs binomial " + label;
    d.status = degeneracy_ok ? Status::Pass : Status::Fail;
    report.add(d);
  }

  if (m.n >= 2) {
    const auto base = cartesian_energies(m, c.n_max);
    const std::vector<std::pair<std::string, std::vector<T>>> others{
        {"hyperspherical", hyperspherical_energies(m, c.n_max)},
        {"radial form", radial_form_energies(m, c.n_max)},
        {"substructure {B_i,A_ij,C_ij}", substructure_energies(m, c.n_max, c.p_max)},
        {"Racah chain", racah_energies(m, c.n_max)}};
    Json agreement = Json::array();
    for (const auto& [name, values] : others) {
      const auto cmp = compare_multisets(base, values, c.tol.spectrum);
      CheckRecord r = bounded(suite, "cartesian vs " + name + " multiset " + label, {}, cmp.max_rel_diff, tol,
                              exact ? "exact rational equality" : "");
      if (!cmp.equal) r.status = Status::Fail;
      if (cmp.size_left != cmp.size_right)
        r.note = "sizes differ: " + std::to_string(cmp.size_left) + " vs " + std::to_string(cmp.size_right);
      r.elapsed_seconds = seconds_since(t0);
      report.add(r);
      agreement.push_back({{"derivation", name}, {"size", cmp.size_right}, {"equal", cmp.equal}});
    }
    table["agreement"] = agreement;

    const auto der = derive_substructure(m, c.p_max);
    bool positive = true;
    for (bool p : der.positivity_ok) positive = positive && p;
    CheckRecord pos;
    pos.suite = suite;
    pos.name = "substructure positivity of Phi up to p_max " + label;
    pos.status = positive ? Status::Pass : Status::Fail;
    report.add(pos);

    // e(Y_1) from the Racah chain against the separation constant, and the
    // quoted e(Z) display.
    long double worst = 0, worst_quoted = 0;
    bool exact_mismatch = false, racah_positive = true;
    const int cap = std::min(c.n_max, 4);
    for_each_tuple(m.n, cap, [&](const std::vector<int>& t) {
      std::vector<int> q(t.begin(), t.end() - 1);
      const auto rv = racah_spectrum(m, q, t.back());
      racah_positive = racah_positive && rv.positivity_ok;
      int total = t.back();
      for (int v : q) total += v;
      const T ez = hyperspherical_e_z(m, total);
      const long double a = as_long_double(rv.e_y1_top), b = as_long_double(ez),
                        qd = as_long_double(rv.e_z_quoted);
      if constexpr (std::is_same_v<T, Rational>) exact_mismatch = exact_mismatch || rv.e_y1_top != ez;
      worst = std::max(worst, std::fabs(a - b) / std::max(std::fabs(b), 1e-300L));
      worst_quoted = std::max(worst_quoted, std::fabs(qd - b) / std::max(std::fabs(b), 1e-300L));
    });
    CheckRecord ey = bounded(suite, "Racah e(Y_1) vs separation-constant e(Z) " + label, {},
                             static_cast<double>(worst), tol);
    if (exact_mismatch) ey.status = Status::Fail;
    report.add(ey);
    CheckRecord rp;
    rp.suite = suite;
    rp.name = "Racah Y_1/B_N positivity of Phi up to p_N " + label;
    rp.status = racah_positive ? Status::Pass : Status::Fail;
    report.add(rp);
    CheckRecord q = bounded(suite, "quoted e(Z) display vs separation-constant e(Z) " + label, {},
                            static_cast<double>(worst_quoted), tol,
                            "the displayed bracket ends in +N; the separation constant gives +(N-1)");
    if (q.status == Status::Fail) q.status = Status::Info;
    report.add(q);
  }
  tables.push_back(table);

  if (!cross_checks || m.n < 2) return;
  const int p = std::max(c.p_max, 6);
  for (int i = 1; i <= m.n; ++i)
    for (int j = i + 1; j <= m.n; ++j) {
      const auto r = sal1_gamma0_crosscheck(m, i, j, p, 6, c.tol.proportionality);
      char note[160];
      std::snprintf(note, sizeof note, "constant ratio %.12g over %zu points", static_cast<double>(r.constant),
                    r.ratios.size());
      CheckRecord rec = bounded(suite, r.name, r.indices, static_cast<double>(r.spread),
                                exact ? 0.0 : c.tol.proportionality, note);
      if (!r.proportional) rec.status = Status::Fail;
      report.add(rec);
      CheckRecord pre;
      pre.suite = suite;
      pre.name = "gamma=0 factorized prefactor 1/(1024 b^2)";
      pre.indices = r.indices;
      pre.value = static_cast<double>(r.constant);
      pre.status = std::fabs(r.constant - 1) < 1e-12L ? Status::Pass : Status::Info;
      if (pre.status == Status::Info) pre.note = "equality needs 1/(64 b^2); the quoted prefactor is 16 times smaller";
      report.add(pre);
    }
  const T y1(7), y_next(5), zm(3), h(11);
  auto add_nz = [&](const Proportionality& r) {
    char note[200];
    std::snprintf(note, sizeof note, "%s display; ratio %.12g at first point, free roots y1=7 y'=5 z=3 h=11",
                  r.variant.c_str(), static_cast<double>(r.constant));
    CheckRecord rec = bounded(suite, r.name + " (" + r.variant + ")", r.indices, static_cast<double>(r.spread),
                              exact ? 0.0 : c.tol.proportionality, note);
    if (!r.proportional) rec.status = Status::Fail;
    if (r.variant == "printed" && !r.proportional) {
      rec.status = Status::Info;
      rec.note += "; not proportional as printed, proportional with [2xi+1] to the first power in the -48 gamma^6 term";
    }
    report.add(rec);
  };
  for (int i = 2; i <= m.n - 1; ++i)
    for (auto v : {GammaNZVariant::Printed, GammaNZVariant::Corrected})
      add_nz(zal2_crosscheck(m, i, y1, y_next, zm, v, 9, c.tol.proportionality));
  for (auto v : {GammaNZVariant::Printed, GammaNZVariant::Corrected})
    add_nz(yal1_crosscheck(m, h, zm, v, 9, c.tol.proportionality));
}

// --- numcheck --------------------------------------------------------------

std::vector<long double> theta_samples(const AngularFactor& f, int count) {
  std::vector<long double> out;
  const long double lo = 0.03L, hi = std::numbers::pi_v<long double> / 2 - 0.03L;
  const long double p_scale = std::fabs(jacobi_eval(f.degree, f.alpha, f.beta, 1.0L));
  const int candidates = 8 * count;
  for (int k = 0; k < candidates && static_cast<int>(out.size()) < count; ++k) {
    // Deterministic low-discrepancy walk over the interval.
    const long double u = std::fmod(0.5L + k * 0.6180339887498948482L, 1.0L);
    const long double th = lo + u * (hi - lo);
    if (std::fabs(jacobi_eval(f.degree, f.alpha, f.beta, std::cos(2 * th))) < 1e-2L * p_scale) continue;
    out.push_back(th);
  }
  return out;
}

std::vector<long double> r_samples(const Model<long double>& m, int tau_r, long double two_nu, int count) {
  std::vector<long double> out;
  const long double scale = 1 / std::sqrt(m.s);
  const long double l0 = std::fabs(laguerre_eval(tau_r, two_nu, 0));
  for (int k = 0; k < 8 * count && static_cast<int>(out.size()) < count; ++k) {
    const long double u = std::fmod(0.5L + k * 0.6180339887498948482L, 1.0L);
    const long double r = scale * (0.3L + 2.7L * u);
    if (std::fabs(laguerre_eval(tau_r, two_nu, m.s * r * r)) < 1e-2L * l0) continue;
    out.push_back(r);
  }
  return out;
}

struct FdResult {
  FdConvergence conv;
  long double truncation = 0;
};

void numcheck_branch(const Model<long double>& m, const RunConfig& c, Report& report,
                     std::map<long double, FdResult>& fd_cache) {
  const std::string suite = "numeric";
  const std::string label = branch_label(m.branch);
  const int samples = c.tol.samples;
  const long double b = m.b();
  const Grid1D grid = reference_grid(b, c.grid.points, c.grid.x_min_scale, c.grid.x_max_scale);

  bool all_fd = true;
  // e(B_i)(q) for q = 0..levels-1 in the branch of coordinate i.
  std::vector<std::vector<long double>> per_coord(m.n);
  for (int i = 1; i <= m.n; ++i) {
    const long double ai = m.a[i - 1];
    const bool full_line = ai == 0;
    if ((m.branch[i - 1] < 0 && !full_line) || ai < 0) {
      all_fd = false;
      CheckRecord r;
      r.suite = suite;
      r.name = "fd e(B_i) levels " + label;
      r.indices = {i};
      r.status = Status::Info;
      r.note = m.branch[i - 1] < 0 ? "minus branch compared formula to formula; Dirichlet solve realizes the plus branch"
                                   : "a_i < 0 not solved numerically";
      report.add(r);
      continue;
    }
    auto t0 = Clock::now();
    auto it = fd_cache.find(ai);
    if (it == fd_cache.end()) {
      FdResult res;
      // On the full line the plus branch is the odd ladder and the minus
      // branch the even one, so twice the levels are needed.
      const int count = full_line ? 2 * c.grid.levels : c.grid.levels;
      res.conv = fd_convergence(ai, b, grid, b_operator_levels(ai, b, count));
      // Relative eigenvalue shift from the Dirichlet wall at x_min ~ x_min^(2 nu).
      const long double nu = std::sqrt(1 + 8 * ai) / 2;
      res.truncation = ai == 0 ? 0 : std::pow(static_cast<long double>(c.grid.x_min_scale), 2 * nu);
      it = fd_cache.emplace(ai, std::move(res)).first;
    }
    const auto& conv = it->second.conv;
    for (int q = 0; q < c.grid.levels; ++q)
      per_coord[i - 1].push_back(full_line ? conv.coarse[2 * q + (m.branch[i - 1] > 0 ? 1 : 0)] : conv.coarse[q]);
    long double worst = 0, worst_ratio_dev = 0, ratio_at_worst = 4, fine_err = 1;
    for (std::size_t k = 0; k < conv.exact.size(); ++k) {
      worst = std::max(worst, std::fabs(conv.coarse[k] - conv.exact[k]) / conv.exact[k]);
      fine_err = std::min(fine_err, std::fabs(conv.fine[k] - conv.exact[k]) / conv.exact[k]);
      const long double dev = std::max(conv.ratio[k] - static_cast<long double>(c.tol.ratio_max),
                                       static_cast<long double>(c.tol.ratio_min) - conv.ratio[k]);
      if (k == 0 || dev > worst_ratio_dev) {
        worst_ratio_dev = dev;
        ratio_at_worst = conv.ratio[k];
      }
    }
    CheckRecord lv = bounded(suite,
                             (full_line ? "fd full-line ladder s(2m+1) lowest levels " : "fd e(B_i) = 2s(2q+nu_i+1) lowest levels ") + label,
                             {i}, static_cast<double>(worst), c.tol.fd_relative,
                             std::to_string(conv.exact.size()) + " levels on the reference grid");
    lv.elapsed_seconds = seconds_since(t0);
    report.add(lv);
    CheckRecord ratio;
    ratio.suite = suite;
    ratio.name = "fd two-grid error ratio " + label;
    ratio.indices = {i};
    ratio.value = static_cast<double>(ratio_at_worst);
    ratio.status = worst_ratio_dev <= 0 ? Status::Pass : Status::Fail;
    char range[96];
    std::snprintf(range, sizeof range, "least favourable level; accepted range [%g, %g]", c.tol.ratio_min,
                  c.tol.ratio_max);
    ratio.note = range;
    if (it->second.truncation > 0.05L * fine_err) {
      ratio.status = Status::Info;
      ratio.note = "truncation at x_min dominates the fine-grid error; ratio not meaningful";
    }
    report.add(ratio);
  }

  if (all_fd) {
    const int cap = std::min(c.n_max, c.grid.levels - 1);
    long double worst = 0;
    for_each_tuple(m.n, cap, [&](const std::vector<int>& q) {
      long double sum = 0;
      for (int i = 0; i < m.n; ++i) sum += per_coord[i][q[i]];
      const long double e = cartesian_energy(m, q);
      worst = std::max(worst, std::fabs(sum / 2 - e) / e);
    });
    report.add(bounded(suite, "fd sum of e(B_i)/2 vs cartesian spectrum " + label, {}, static_cast<double>(worst),
                       c.tol.fd_relative, "all tuples with sum q <= " + std::to_string(cap)));
  }

  // Cartesian residuals.
  std::vector<std::vector<int>> tuples{std::vector<int>(m.n, 0)};
  {
    std::vector<int> e1(m.n, 0), mix(m.n, 0);
    e1[0] = 1;
    tuples.push_back(e1);
    for (int i = 0; i < m.n; ++i) mix[i] = (i % 3);
    mix[m.n - 1] += 1;
    tuples.push_back(mix);
  }
  for (const auto& q : tuples) {
    auto t0 = Clock::now();
    const auto pts = cartesian_samples(m, q, samples);
    auto r = cartesian_residual(m, q, pts);
    CheckRecord rec = bounded(suite, "cartesian residual " + label, q, static_cast<double>(r.max_residual),
                              c.tol.residual, std::to_string(r.samples) + " samples");
    if (static_cast<int>(r.samples) < samples) rec.status = Status::Fail;
    rec.elapsed_seconds = seconds_since(t0);
    report.add(rec);
  }

  if (m.n < 2) return;
  std::vector<std::vector<int>> taus{std::vector<int>(m.n - 1, 0), std::vector<int>(m.n - 1, 1)};
  {
    std::vector<int> t(m.n - 1, 0);
    for (int i = 0; i < m.n - 1; ++i) t[i] = (2 * i + 2) % 3;
    taus.push_back(t);
  }
  for (const auto& tau : taus) {
    for (int l = 1; l <= m.n - 1; ++l) {
      const auto f = angular_factor(m, tau, l);
      const auto th = theta_samples(f, samples);
      long double worst = 0, worst_printed = 0;
      for (long double t : th) {
        worst = std::max(worst, angular_residual(m, tau, l, t));
        worst_printed = std::max(worst_printed, angular_residual(m, tau, l, t, CentrifugalSign::Quoted));
      }
      std::vector<int> idx{l};
      idx.insert(idx.end(), tau.begin(), tau.end());
      CheckRecord rec = bounded(suite, "angular residual " + label, idx, static_cast<double>(worst), c.tol.residual,
                                std::to_string(th.size()) + " samples; indices are level then tau");
      if (static_cast<int>(th.size()) < samples) rec.status = Status::Fail;
      report.add(rec);
      if (l < m.n - 1) {
        CheckRecord pr = bounded(suite, "angular residual with +k_{l+1}/sin^2 as printed " + label, idx,
                                 static_cast<double>(worst_printed), c.tol.residual,
                                 "separating the Laplacian gives -k_{l+1}/sin^2");
        if (pr.status == Status::Fail) pr.status = Status::Info;
        report.add(pr);
      }
      if (f.beta > 0 && f.alpha > 0) {
        const long double k_rq = angular_rayleigh_k(m, tau, l);
        report.add(bounded(suite, "Rayleigh quotient vs closed-form k_l " + label, idx,
                           static_cast<double>(std::fabs(k_rq - f.k) / std::fabs(f.k)), c.tol.rayleigh));
      } else {
        CheckRecord skip;
        skip.suite = suite;
        skip.name = "Rayleigh quotient vs closed-form k_l " + label;
        skip.indices = idx;
        skip.status = Status::Info;
        skip.note = "derivative not square integrable for a negative exponent; compared formula to formula";
        report.add(skip);
      }
    }
    for (int tau_r : {0, 2}) {
      const auto hv = spectrum_hyperspherical(m, tau_r, tau);
      const auto rs = r_samples(m, tau_r, hv.two_nu, samples);
      long double worst = 0, worst_printed = 0;
      for (long double r : rs) {
        worst = std::max(worst, radial_residual(m, tau_r, tau, r));
        worst_printed = std::max(worst_printed, radial_residual(m, tau_r, tau, r, CentrifugalSign::Quoted));
      }
      std::vector<int> idx{tau_r};
      idx.insert(idx.end(), tau.begin(), tau.end());
      CheckRecord rec = bounded(suite, "radial residual " + label, idx, static_cast<double>(worst), c.tol.residual,
                                std::to_string(rs.size()) + " samples; indices are tau_r then tau");
      if (static_cast<int>(rs.size()) < samples) rec.status = Status::Fail;
      report.add(rec);
      CheckRecord pr = bounded(suite, "radial residual with +k_1/r^2 as printed " + label, idx,
                               static_cast<double>(worst_printed), c.tol.residual,
                               "separating the Laplacian gives -k_1/r^2");
      if (pr.status == Status::Fail) pr.status = Status::Info;
      report.add(pr);
    }
  }
}

void degeneracy_checks(const RunConfig& c, Report& report) {
  std::set<int> dims{1, 2, 3, 4, 5, 6, c.n};
  for (int n : dims) {
    bool ok = true;
    for (int k = 0; k <= 10; ++k) ok = ok && degeneracy_binomial(n, k) == degeneracy_brute_force(n, k);
    CheckRecord r;
    r.suite = "numeric";
    r.name = "degeneracy binomial vs enumeration, n <= 10";
    r.indices = {n};
    r.status = ok ? Status::Pass : Status::Fail;
    report.add(r);
  }
}

std::string render(const Report& r, const CommandOptions& opts, double total) {
  if (opts.format == "md") return r.to_markdown(opts.timings, total);
  return dump_json(r.to_json(opts.timings, total));
}

}  // namespace

Report run_verify(const RunConfig& c, const CommandOptions& opts) {
  Report report("verify", c, opts.exact);
  report.set_mode("exact");
  const auto suites = selected(c, {"sw_relations", "substructures", "racah_chain", "su11", "casimirs"}, report, "verify");
  if (c.n < 2) throw ConfigError("symbolic suites need N >= 2");
  if (c.n > kMaxDim) throw ConfigError("symbolic suites support N <= " + std::to_string(kMaxDim));
  if (opts.exact) report.note("--exact has no effect on verify; symbolic checks are always exact");
  std::optional<FaultInjection> fault;
  if (opts.inject_fault) {
    fault = FaultInjection{*opts.inject_fault};
    report.note("fault injected into generator " + *opts.inject_fault);
  }
  const GeneratorSet g = build_generators(c.n, fault);
  const Coverage coverage = c.n >= 5 ? Coverage::Spot : Coverage::Full;
  if (coverage == Coverage::Spot) report.note("N >= 5: one index tuple per relation");
  auto want = [&](const std::string& s) { return std::find(suites.begin(), suites.end(), s) != suites.end(); };

  if (want("sw_relations")) {
    for (const auto& r : verify_sw_relations(g, coverage)) report.add(from_relation("sw_relations", r));
    for (const auto& r : verify_substitution_regression(g)) report.add(from_relation("sw_relations", r));
  }
  const bool casimirs = want("casimirs");
  if (want("substructures") || casimirs) {
    for (int i = 1; i <= c.n; ++i)
      for (int j = i + 1; j <= c.n; ++j) {
        if (coverage == Coverage::Spot && !(i == 1 && j == 2)) continue;
        add_relations(report, "substructures", verify_substructure_Qij(g, i, j), want("substructures"), casimirs);
      }
  }
  if (want("racah_chain") || casimirs) {
    std::vector<RelationCheck> chain;
    if (coverage == Coverage::Full) {
      chain = verify_racah_suite(g);
    } else {
      if (c.n >= 3) chain = verify_racah_chain(g, 2);
      for (auto& r : verify_yb_substructure(g)) chain.push_back(std::move(r));
    }
    add_relations(report, "racah_chain", chain, want("racah_chain"), casimirs);
  }
  if (want("su11"))
    for (const auto& r : verify_su11(g)) report.add(from_relation("su11", r));
  return report;
}

Report run_derive(const RunConfig& c, const CommandOptions& opts) {
  Report report("derive", c, opts.exact);
  selected(c, {"spectra"}, report, "derive");
  const ModelParams p = c.params();
  const bool exact = opts.exact && exact_available(p);
  if (opts.exact && !exact) report.note("--exact requested but some nu_i or s is irrational; using long double");
  report.set_mode(exact ? "exact" : "float");
  if (c.n < 2) report.note("N = 1: only the cartesian spectrum applies");
  Json tables = Json::array();
  bool first = true;
  for (const auto& br : branches_for(c)) {
    if (exact)
      derive_branch(make_model<Rational>(p, br), c, report, tables, first);
    else
      derive_branch(make_model<long double>(p, br), c, report, tables, first);
    first = false;
  }
  report.note("structure-function cross-checks use the first branch");
  report.set_section("spectra", tables);
  return report;
}

Report run_numcheck(const RunConfig& c, const CommandOptions& opts) {
  Report report("numcheck", c, opts.exact);
  selected(c, {"numeric"}, report, "numcheck");
  if (opts.exact) report.note("--exact has no effect on numcheck; oracles are floating point");
  std::map<long double, FdResult> cache;
  for (const auto& br : branches_for(c)) numcheck_branch(make_model<long double>(c.params(), br), c, report, cache);
  degeneracy_checks(c, report);
  return report;
}

CommandOutcome execute(const CommandOptions& opts) {
  CommandOutcome out;
  const auto t0 = Clock::now();
  try {
    if (opts.format != "json" && opts.format != "md") throw ConfigError("--format must be json or md");
    if (opts.n && *opts.n < 1) throw ConfigError("--n must be positive");
    const RunConfig c = load_config(opts.config_path, opts.n);
    std::optional<Report> report;
    if (opts.command == "verify")
      report = run_verify(c, opts);
    else if (opts.command == "derive")
      report = run_derive(c, opts);
    else if (opts.command == "numcheck")
      report = run_numcheck(c, opts);
    else
      throw ConfigError("unknown command '" + opts.command + "'");
    out.rendered = render(*report, opts, seconds_since(t0));
    out.exit_code = report->exit_code();
    out.message = opts.command + ": " + (out.exit_code == 0 ? "pass" : "fail") + " (" +
                  std::to_string(report->checks().size()) + " checks, " + std::to_string(report->failures()) +
                  " failed)";
    for (const auto& r : report->checks())
      if (r.status == Status::Fail) {
        std::string idx;
        for (int v : r.indices) idx += (idx.empty() ? "" : ",") + std::to_string(v);
        out.message += "\n  failed: " + r.suite + " " + r.name + (idx.empty() ? "" : " [" + idx + "]");
      }
  } catch (const ConfigError& e) {
    out.exit_code = 2;
    out.message = std::string("config error: ") + e.what();
  } catch (const std::invalid_argument& e) {
    out.exit_code = 2;
    out.message = std::string("invalid input: ") + e.what();
  } catch (const std::exception& e) {
    out.exit_code = 1;
    out.message = std::string("error: ") + e.what();
  }
  return out;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Symmetry-algebra verification, spectrum derivation and numerical oracles", "swalg"};
  app.require_subcommand(1);
  CommandOptions opts;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opts.config_path, "TOML run configuration")->required();
    sub->add_option("--n", opts.n, "override N");
    sub->add_flag("--exact", opts.exact, "rational arithmetic where every nu_i and s is rational");
    sub->add_option("--out", opts.out, "write the report here instead of stdout");
    sub->add_option("--format", opts.format, "json or md")->check(CLI::IsMember({"json", "md"}));
    sub->add_flag("--timings", opts.timings, "include wall-clock timings (reports are then not reproducible)");
    sub->add_option("--inject-fault", opts.inject_fault)->group("");
  };
  add_common(app.add_subcommand("verify", "exact symbolic relation suites"));
  add_common(app.add_subcommand("derive", "spectra from every derivation and structure-function cross-checks"));
  add_common(app.add_subcommand("numcheck", "finite-difference and residual oracles"));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opts.command = app.get_subcommands().front()->get_name();
  const CommandOutcome r = execute(opts);
  if (r.exit_code == 2) {
    std::cerr << r.message << "\n";
    return 2;
  }
  if (opts.out) {
    std::ofstream f(*opts.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << *opts.out << "\n";
      return 2;
    }
    f << r.rendered;
  } else {
    std::cout << r.rendered;
  }
  std::cerr << r.message << "\n";
  return r.exit_code;
}

}  // namespace swalg
