#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swalg/commands.hpp"
#include "swalg/relations.hpp"
#include "swalg/spectral.hpp"
#include "swalg/spectrum.hpp"

namespace py = pybind11;

namespace {

swalg::ModelParams params(const std::vector<double>& a, double b) {
  swalg::ModelParams p;
  p.n = static_cast<int>(a.size());
  p.a.assign(a.begin(), a.end());
  p.b = b;
  return p;
}

std::vector<double> to_double(const std::vector<long double>& v) { return {v.begin(), v.end()}; }

}  // namespace

PYBIND11_MODULE(_swalg, m) {
  m.doc() = "Symmetry algebra, spectra and numerical oracles of the N-dimensional Smorodinsky-Winternitz system";
  m.attr("__version__") = swalg::kToolVersion;

  m.def(
      "run",
      [](const std::string& command, const std::string& config, std::optional<int> n, bool exact,
         const std::string& format) {
        swalg::CommandOptions o;
        o.command = command;
        o.config_path = config;
        o.n = n;
        o.exact = exact;
        o.format = format;
        swalg::CommandOutcome r;
        {
          py::gil_scoped_release release;
          r = swalg::execute(o);
        }
        return py::make_tuple(r.exit_code, r.rendered, r.message);
      },
      py::arg("command"), py::arg("config"), py::arg("n") = py::none(), py::arg("exact") = false,
      py::arg("format") = "json", "Run verify, derive or numcheck; returns (exit_code, report, message).");

  m.def(
      "cartesian_energies",
      [](const std::vector<double>& a, double b, int n_max, std::optional<std::vector<int>> branch) {
        const auto p = params(a, b);
        const auto m = swalg::make_model<long double>(p, branch.value_or(std::vector<int>(p.n, 1)));
        return to_double(swalg::cartesian_energies(m, n_max));
      },
      py::arg("a"), py::arg("b"), py::arg("n_max"), py::arg("branch") = py::none());

  m.def(
      "racah_energies",
      [](const std::vector<double>& a, double b, int n_max, std::optional<std::vector<int>> branch) {
        const auto p = params(a, b);
        const auto m = swalg::make_model<long double>(p, branch.value_or(std::vector<int>(p.n, 1)));
        return to_double(swalg::racah_energies(m, n_max));
      },
      py::arg("a"), py::arg("b"), py::arg("n_max"), py::arg("branch") = py::none());

  m.def("degeneracy", &swalg::degeneracy_binomial, py::arg("n"), py::arg("level"));

  m.def(
      "fd_eigen_1d",
      [](double a, double b, int count, int points) {
        return to_double(swalg::fd_eigen_1d(a, b, swalg::reference_grid(b, points), count));
      },
      py::arg("a"), py::arg("b"), py::arg("count"), py::arg("points") = 4000);

  m.def(
      "laguerre", [](int n, double alpha, double x) { return static_cast<double>(swalg::laguerre_eval(n, alpha, x)); },
      py::arg("n"), py::arg("alpha"), py::arg("x"));
  m.def(
      "jacobi",
      [](int n, double alpha, double beta, double x) {
        return static_cast<double>(swalg::jacobi_eval(n, alpha, beta, x));
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("x"));

  m.def(
      "verify_relations",
      [](int n) {
        std::vector<swalg::RelationCheck> checks;
        {
          py::gil_scoped_release release;
          checks = swalg::verify_sw_relations(swalg::build_generators(n, std::nullopt),
                                              n >= 5 ? swalg::Coverage::Spot : swalg::Coverage::Full);
        }
        py::list out;
        for (const auto& c : checks) {
          py::dict d;
          d["name"] = c.name;
          d["indices"] = c.indices;
          d["passed"] = c.passed;
          d["informational"] = c.informational;
          d["residual_terms"] = c.term_count;
          out.append(d);
        }
        return out;
      },
      py::arg("n"));
}
