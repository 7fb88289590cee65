#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "witbench/bounds.hpp"
#include "witbench/core.hpp"
#include "witbench/density.hpp"
#include "witbench/sim.hpp"
#include "witbench/strategies.hpp"
#include "witbench/sweep.hpp"

namespace py = pybind11;
using namespace witbench;

PYBIND11_MODULE(_witbench, m) {
  m.doc() = "bounded-noise decentralized control benchmark: strategies, "
            "Monte Carlo, analytic bounds, adversarial search";

  py::class_<ProblemParams>(m, "ProblemParams")
      .def(py::init<double, double, int>(), py::arg("k") = 1.0,
           py::arg("sigma0") = 1.0, py::arg("m") = 1)
      .def_readwrite("k", &ProblemParams::k)
      .def_readwrite("sigma0", &ProblemParams::sigma0)
      .def_readwrite("m", &ProblemParams::m)
      .def("__repr__", [](const ProblemParams& p) {
        return "ProblemParams(k=" + std::to_string(p.k) +
               ", sigma0=" + std::to_string(p.sigma0) +
               ", m=" + std::to_string(p.m) + ")";
      });
  m.def("validate", &validate, py::arg("params"));

  py::class_<NoiseModel>(m, "NoiseModel")
      .def_readonly("a", &NoiseModel::a)
      .def_readonly("h_bits", &NoiseModel::h_bits)
      .def_readonly("label", &NoiseModel::label)
      .def(
          "sample",
          [](const NoiseModel& n, std::uint64_t seed, std::size_t count) {
            return n.sampler(seed, count);
          },
          py::arg("seed"), py::arg("count"));
  m.def("uniform_noise", &uniform_noise);
  m.def("triangular_noise", &triangular_noise);
  m.def("custom_noise", &custom_noise, py::arg("xs"), py::arg("fs"),
        py::arg("label") = "custom");
  m.def("custom_noise_from_file", &custom_noise_from_file, py::arg("path"));
  m.def("entropy_oracle", &entropy_oracle, py::arg("pdf"), py::arg("lo"),
        py::arg("hi"), py::arg("grid_points") = 100000);
  m.def("gaussian_entropy_bits", &gaussian_entropy_bits);

  py::class_<QuantizerShape>(m, "QuantizerShape")
      .def_readonly("spacing", &QuantizerShape::spacing)
      .def_readonly("offset", &QuantizerShape::offset);
  py::class_<Strategy>(m, "Strategy")
      .def_readonly("label", &Strategy::label)
      .def_readonly("quantizer", &Strategy::quantizer)
      .def("gamma1", [](const Strategy& s, double x0) { return s.gamma1(x0); },
           py::arg("x0"))
      .def("gamma2", [](const Strategy& s, double y2) { return s.gamma2(y2); },
           py::arg("y2"));
  m.def("quantizer_strategy", &quantizer_strategy, py::arg("spacing"),
        py::arg("offset") = 0.0);
  m.def("zero_input_strategy", &zero_input_strategy, py::arg("sigma0"),
        py::arg("sigma_z2"));
  m.def("zero_forcing_strategy", &zero_forcing_strategy);
  m.def(
      "linear_strategy",
      [](double alpha, double beta) { return linear_strategy({alpha, beta}); },
      py::arg("alpha"), py::arg("beta"));
  m.def("best_strategy", &best_strategy, py::arg("params"), py::arg("noise"));

  py::class_<LinearOptimum>(m, "LinearOptimum")
      .def_readonly("cost", &LinearOptimum::cost)
      .def_readonly("P_star", &LinearOptimum::P_star);
  m.def("optimal_linear_cost", &optimal_linear_cost, py::arg("params"));
  m.def(
      "optimal_linear_spec",
      [](double sigma0, double P) {
        const LinearStrategySpec s = optimal_linear_spec(sigma0, P);
        return py::make_tuple(s.alpha, s.beta);
      },
      py::arg("sigma0"), py::arg("P"));

  py::class_<CostBreakdown>(m, "CostBreakdown")
      .def_readonly("first_stage", &CostBreakdown::first_stage)
      .def_readonly("second_stage", &CostBreakdown::second_stage)
      .def_readonly("total", &CostBreakdown::total);
  m.def(
      "evaluate_cost",
      [](const ProblemParams& params, const Strategy& strategy,
         std::vector<double> x0, std::vector<double> z) {
        return evaluate_cost(params, strategy, {std::move(x0), std::move(z)});
      },
      py::arg("params"), py::arg("strategy"), py::arg("x0"), py::arg("z"));

  py::class_<ScalarMin>(m, "ScalarMin")
      .def_readonly("argmin", &ScalarMin::argmin)
      .def_readonly("value", &ScalarMin::value);
  m.def("minimize_scalar", &minimize_scalar, py::arg("objective"),
        py::arg("lo"), py::arg("hi"), py::arg("grid_points") = 4096,
        py::arg("tol") = 1e-10);

  py::class_<UpperBound>(m, "UpperBound")
      .def_readonly("bound", &UpperBound::bound)
      .def_readonly("winner", &UpperBound::winner);
  py::class_<LowerBound>(m, "LowerBound")
      .def_readonly("bound", &LowerBound::bound)
      .def_readonly("P_star", &LowerBound::P_star);
  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("upper", &BoundReport::upper)
      .def_readonly("lower", &BoundReport::lower)
      .def_readonly("P_star", &BoundReport::P_star)
      .def_readonly("ratio", &BoundReport::ratio)
      .def_readonly("winning_strategy", &BoundReport::winning_strategy);
  m.def("upper_bound_bayes", &upper_bound_bayes, py::arg("params"),
        py::arg("noise"));
  m.def("lower_bound_bayes", &lower_bound_bayes, py::arg("params"),
        py::arg("h_bits"));
  m.def("kappa", &kappa, py::arg("P"), py::arg("sigma0"), py::arg("h_bits"));
  m.def("capacity_bound", &capacity_bound, py::arg("P"), py::arg("sigma0"),
        py::arg("h_bits"));
  m.def("distortion_rate_gaussian", &distortion_rate_gaussian,
        py::arg("sigma0_sq"), py::arg("R"));
  m.def("mu_bound", &mu_bound, py::arg("a"), py::arg("h_bits"));
  m.def("upper_bound_adversarial", &upper_bound_adversarial, py::arg("k"));
  m.def("lower_bound_adversarial", &lower_bound_adversarial, py::arg("k"));
  m.def("finite_ratio", &finite_ratio, py::arg("upper"), py::arg("lower"));
  m.def("bayes_bound_report", &bayes_bound_report, py::arg("params"),
        py::arg("noise"));
  m.def("adversarial_bound_report", &adversarial_bound_report, py::arg("k"));

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("mean", &McEstimate::mean)
      .def_readonly("ci_halfwidth", &McEstimate::ci_halfwidth)
      .def_readonly("n", &McEstimate::n)
      .def_readonly("seed", &McEstimate::seed);
  py::class_<WorstCase>(m, "WorstCase")
      .def_readonly("value", &WorstCase::value)
      .def_readonly("at_x0", &WorstCase::at_x0)
      .def_readonly("at_z", &WorstCase::at_z)
      .def_readonly("on_x0_boundary", &WorstCase::on_x0_boundary);
  // strategies and noise models hold only native code, so the interpreter
  // lock can be dropped while the simulations run
  m.def("monte_carlo_cost", &monte_carlo_cost, py::arg("params"),
        py::arg("strategy"), py::arg("noise"), py::arg("n"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());
  m.def("worst_case_cost", &worst_case_cost, py::arg("params"),
        py::arg("strategy"), py::arg("x0_lo"), py::arg("x0_hi"),
        py::arg("grid"), py::arg("z_margin") = 1e-12,
        py::call_guard<py::gil_scoped_release>());

  py::class_<RatioReport>(m, "RatioReport")
      .def_readonly("bounds", &RatioReport::bounds)
      .def_readonly("mc_best", &RatioReport::mc_best)
      .def_readonly("best_label", &RatioReport::best_label)
      .def_readonly("linear_cost", &RatioReport::linear_cost)
      .def_readonly("linear_P_star", &RatioReport::linear_P_star)
      .def_readonly("linear_ratio", &RatioReport::linear_ratio)
      .def_readonly("mu", &RatioReport::mu);
  m.def("ratio_report", &ratio_report, py::arg("params"), py::arg("noise"),
        py::arg("n"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<SweepConfig>(m, "SweepConfig")
      .def(py::init<>())
      .def_readwrite("k_grid", &SweepConfig::k_grid)
      .def_readwrite("sigma0_grid", &SweepConfig::sigma0_grid)
      .def_readwrite("noise", &SweepConfig::noise)
      .def_readwrite("n", &SweepConfig::n)
      .def_readwrite("seed", &SweepConfig::seed)
      .def_readwrite("m", &SweepConfig::m)
      .def_readwrite("out_path", &SweepConfig::out_path)
      .def_readwrite("format", &SweepConfig::format)
      .def_readwrite("adversarial", &SweepConfig::adversarial);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("max_ratio", &SweepResult::max_ratio)
      .def_readonly("mu", &SweepResult::mu)
      .def_readonly("certified", &SweepResult::certified)
      .def_readonly("rendered", &SweepResult::rendered);
  m.def("log_grid", &log_grid, py::arg("lo"), py::arg("hi"), py::arg("count"));
  m.def("run_sweep", &run_sweep, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
}
