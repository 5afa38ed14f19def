// One pass/fail line per acceptance criterion; exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "swalg/commands.hpp"
#include "swalg/crosscheck.hpp"
#include "swalg/relations.hpp"
#include "swalg/spectral.hpp"
#include "swalg/spectrum.hpp"

using namespace swalg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Tally {
  std::size_t checks = 0, failed = 0, informational = 0;
  std::string first_failure;

  void add(const std::vector<RelationCheck>& cs) {
    for (const auto& c : cs) {
      ++checks;
      if (c.informational) {
        ++informational;
        continue;
      }
      if (!c.passed) {
        ++failed;
        if (first_failure.empty()) {
          std::ostringstream os;
          os << c.name << " at";
          for (int i : c.indices) os << ' ' << i;
          first_failure = os.str();
        }
      }
    }
  }
  std::string summary() const {
    std::ostringstream os;
    os << checks - informational << " exact relations, " << failed << " nonzero residuals";
    if (informational) os << ", " << informational << " informational";
    if (!first_failure.empty()) os << " (first: " << first_failure << ")";
    return os.str();
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ModelParams exact_params(std::vector<Rational> a, Rational b) {
  ModelParams p;
  p.n = static_cast<int>(a.size());
  for (const auto& v : a) p.a.push_back(to_long_double(v));
  p.b = to_long_double(b);
  p.a_exact = std::move(a);
  p.b_exact = std::move(b);
  return p;
}

ModelParams float_params(std::vector<long double> a, long double b) {
  ModelParams p;
  p.n = static_cast<int>(a.size());
  p.a = std::move(a);
  p.b = b;
  return p;
}

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  for (int n : {3, 4}) t.add(verify_sw_relations(build_generators(n), Coverage::Full));
  t.add(verify_sw_relations(build_generators(5), Coverage::Spot));
  const double secs = seconds_since(t0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "; %.1f s (limit 300 s)", secs);
  return {t.failed == 0 && t.checks > 0 && secs < 300, "N=3,4 all tuples, N=5 one tuple: " + t.summary() + buf};
}

Outcome criterion2() {
  Tally t;
  for (int n : {3, 4}) {
    const auto g = build_generators(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) t.add(verify_substructure_Qij(g, i, j));
  }
  return {t.failed == 0 && t.checks > 0, "Q_ij(3) relations and Casimirs for every pair, N=3,4: " + t.summary()};
}

Outcome criterion3() {
  Tally chain, su;
  for (int n : {3, 4}) chain.add(verify_racah_suite(build_generators(n)));
  for (int n : {2, 3, 4}) su.add(verify_su11(build_generators(n)));
  return {chain.failed == 0 && su.failed == 0 && chain.checks > 0 && su.checks > 0,
          "chain and Y_1/B_N, N=3,4: " + chain.summary() + "; su(1,1) and Z identity, N=2,3,4: " + su.summary()};
}

Outcome criterion4() {
  std::ostringstream os;
  bool pass = true;
  const auto m3 = make_model<Rational>(exact_params({1, 1, 1}, make_rational(1, 2)), {1, 1, 1});
  const auto m4 = make_model<Rational>(exact_params({1, 3, make_rational(3, 8), 0}, Rational(2)), {1, 1, 1, 1});
  long double g0_constant = 0;
  std::size_t g0_cases = 0;
  for (const auto* m : {&m3, &m4})
    for (int i = 1; i <= m->n; ++i)
      for (int j = i + 1; j <= m->n; ++j) {
        const auto r = sal1_gamma0_crosscheck(*m, i, j, 6, 5, 1e-10L);
        pass = pass && r.proportional && r.ratios.size() >= 5;
        if (g0_cases > 0) pass = pass && r.constant == g0_constant;
        g0_constant = r.constant;
        ++g0_cases;
      }
  os << "gamma=0: " << g0_cases << " pairs at b=1/2 and b=2 proportional at 5 points (exact), constant "
     << (double)g0_constant << " for both (prefactor 1/(64 b^2) in place of the quoted 1/(1024 b^2))";

  std::vector<Proportionality> printed, corrected;
  for (const auto* m : {&m3, &m4}) {
    for (int i = 2; i <= m->n - 1; ++i)
      for (auto v : {GammaNZVariant::Printed, GammaNZVariant::Corrected})
        (v == GammaNZVariant::Printed ? printed : corrected)
            .push_back(zal2_crosscheck(*m, i, Rational(7), Rational(5), Rational(3), v, 9, 1e-8L));
    for (auto v : {GammaNZVariant::Printed, GammaNZVariant::Corrected})
      (v == GammaNZVariant::Printed ? printed : corrected)
          .push_back(yal1_crosscheck(*m, Rational(11), Rational(3), v, 9, 1e-8L));
  }
  std::size_t printed_prop = 0, corrected_prop = 0;
  for (const auto& p : printed) printed_prop += p.proportional;
  for (const auto& p : corrected) {
    corrected_prop += p.proportional;
    pass = pass && p.ratios.size() >= 9;
  }
  // Either form being proportional satisfies the criterion; a non-proportional
  // printed form is reported as a finding.
  pass = pass && (printed_prop == printed.size() || corrected_prop == corrected.size());
  os << "; gamma!=0: printed form proportional in " << printed_prop << "/" << printed.size()
     << " cases (finding: not proportional), with [2xi+1] to the first power in the third term proportional in "
     << corrected_prop << "/" << corrected.size() << " cases at 9 points (exact), constant "
     << (double)corrected.front().constant;
  return {pass, os.str()};
}

template <class T>
bool spectra_agree(const Model<T>& m, int n_max, long double tol, long double& worst) {
  const auto cart = cartesian_energies(m, n_max);
  bool ok = true;
  for (const auto& other : {hyperspherical_energies(m, n_max), radial_form_energies(m, n_max),
                            substructure_energies(m, n_max), racah_energies(m, n_max)}) {
    const auto c = compare_multisets(cart, other, tol);
    ok = ok && c.equal && c.size_left > 0;
    worst = std::max(worst, c.max_rel_diff);
  }
  return ok;
}

Outcome criterion5() {
  const std::vector<ModelParams> sets{
      exact_params({1, 6}, make_rational(9, 8)),
      exact_params({1, 1, 1}, make_rational(1, 2)),
      exact_params({1, 3, make_rational(3, 8), 0}, Rational(2)),
      float_params({0.3L, 1.7L}, 0.35L),
      float_params({0.3L, 1.7L, 0.05L}, 0.35L),
      float_params({2.2L, 0.1L, 0.6L, 5.0L}, 1.3L),
  };
  bool pass = true;
  std::size_t models = 0, exact_models = 0;
  long double worst = 0;
  for (const auto& p : sets)
    for (const auto& br : admitted_branches(p)) {
      ++models;
      if (exact_available(p)) {
        ++exact_models;
        pass = spectra_agree(make_model<Rational>(p, br), 8, 0, worst) && pass;
      } else {
        pass = spectra_agree(make_model<long double>(p, br), 8, 1e-12L, worst) && pass;
      }
    }
  std::ostringstream os;
  os << sets.size() << " parameter sets, N in {2,3,4}, " << models << " branch models (" << exact_models
     << " exact rational), n_max=8, four derivations vs cartesian: max relative difference " << (double)worst
     << " (tolerance 1e-12)";
  return {pass, os.str()};
}

Outcome criterion6() {
  std::ostringstream os;
  bool pass = true;
  const long double b = 0.5L;
  const Grid1D grid = reference_grid(b);
  long double worst_rel = 0, rmin = 1e9, rmax = 0;
  for (long double a : {1.0L, 0.0L}) {
    const auto exact = b_operator_levels(a, b, 5);
    const auto fine = fd_eigen_1d(a, b, grid, 5);
    for (int q = 0; q < 5; ++q) worst_rel = std::max(worst_rel, std::fabs(fine[q] / exact[q] - 1));
    const auto conv = fd_convergence(a, b, reference_grid(b, 1000), exact);
    for (long double r : conv.ratio) {
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
    }
  }
  pass = pass && worst_rel < 1e-3L && rmin >= 3.5L && rmax <= 4.5L;
  os << "FD a=1,0 lowest 5 levels: max relative error " << (double)worst_rel << " (tolerance 1e-3), ratio in ["
     << (double)rmin << ", " << (double)rmax << "]";

  long double cart_worst = 0;
  std::size_t cart_cases = 0;
  const std::vector<std::pair<std::vector<long double>, std::vector<std::vector<int>>>> cart_cases_list{
      {{0}, {{0}, {3}}}, {{1, 1}, {{1, 0}, {2, 3}}}, {{1, 0.2L, 3}, {{0, 0, 0}, {1, 2, 1}}}};
  for (const auto& [a, qs] : cart_cases_list) {
    const auto m = make_model<long double>(float_params(a, b), std::vector<int>(a.size(), 1));
    for (const auto& q : qs) {
      const auto r = cartesian_residual(m, q, cartesian_samples(m, q, 20));
      pass = pass && r.samples >= 20;
      cart_worst = std::max(cart_worst, r.max_residual);
      ++cart_cases;
    }
  }
  long double ang_worst = 0;
  std::size_t ang_cases = 0;
  const auto m3 = make_model<long double>(float_params({1, 0.2L, 3}, b), {1, -1, 1});
  for (const auto& tau : std::vector<std::vector<int>>{{0, 0}, {1, 0}, {2, 1}})
    for (int level : {1, 2}) {
      for (int k = 1; k <= 20; ++k) {
        const long double th = (M_PIl / 2) * k / 21.0L;
        ang_worst = std::max(ang_worst, angular_residual(m3, tau, level, th));
      }
      ++ang_cases;
    }
  pass = pass && cart_worst < 1e-7L && ang_worst < 1e-7L;
  os << "; cartesian residual max " << (double)cart_worst << " over " << cart_cases
     << " cases x 20 points; angular residual max " << (double)ang_worst << " over " << ang_cases
     << " cases x 20 points (tolerance 1e-7)";
  return {pass, os.str()};
}

Outcome criterion7() {
  std::size_t cases = 0;
  bool pass = true;
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m <= 10; ++m) {
      pass = pass && degeneracy_binomial(n, m) == degeneracy_brute_force(n, m);
      ++cases;
    }
  return {pass, std::to_string(cases) + " (N, n) pairs, N<=6, n<=10, exact integer equality"};
}

Outcome criterion8() {
  const std::string dir = SWALG_TEST_DATA "/configs/";
  struct Run {
    std::string command, config, format;
    bool exact;
  };
  const std::vector<Run> runs{{"verify", "n3_default.toml", "json", false},
                              {"derive", "n3_default.toml", "json", true},
                              {"derive", "uniform.toml", "md", false},
                              {"numcheck", "numcheck_reference.toml", "md", false},
                              {"numcheck", "numcheck_coarse.toml", "json", false}};
  bool pass = true;
  for (const auto& r : runs) {
    CommandOptions o;
    o.command = r.command;
    o.config_path = dir + r.config;
    o.format = r.format;
    o.exact = r.exact;
    const auto first = execute(o), second = execute(o);
    pass = pass && first.exit_code == 0 && second.exit_code == 0 && !first.rendered.empty() &&
           first.rendered == second.rendered;
  }
  return {pass, std::to_string(runs.size()) + " command/config/format combinations run twice, byte-identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %d: %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
