#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "relinspect/commands.hpp"
#include "relinspect/config.hpp"
#include "relinspect/optimize.hpp"
#include "relinspect/simulate.hpp"

namespace py = pybind11;
using namespace relinspect;

namespace {

StateVector make_state(const std::vector<double>& ages) {
    StateVector sv;
    sv.ages.reserve(ages.size());
    for (double a : ages) {
        sv.ages.push_back({a});
    }
    return sv;
}

std::vector<double> state_list(const StateVector& sv) {
    std::vector<double> out;
    out.reserve(sv.ages.size());
    for (const auto& a : sv.ages) {
        out.push_back(a.initial_degradation);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_relinspect, m) {
    m.doc() = "Reliability and inspection-interval planning for degrading "
              "components under a shared shock process";

    py::register_exception<ConfigError>(m, "ConfigError");

    py::enum_<Topology>(m, "Topology")
        .value("Series", Topology::Series)
        .value("Parallel", Topology::Parallel);

    py::enum_<GammaParameterization>(m, "GammaParameterization")
        .value("Scale", GammaParameterization::Scale)
        .value("Rate", GammaParameterization::Rate);

    py::class_<ShockProcess>(m, "ShockProcess")
        .def(py::init([](double rate) { return ShockProcess{rate}; }), py::arg("rate"))
        .def_readwrite("rate", &ShockProcess::rate);

    py::class_<ComponentModel>(m, "ComponentModel")
        .def(py::init([](double soft_threshold, double hard_threshold,
                         double gamma_shape_rate, double gamma_scale,
                         double damage_mean, double damage_sd, double magnitude_mean,
                         double magnitude_sd) {
                 ComponentModel c{soft_threshold, hard_threshold, gamma_shape_rate,
                                  gamma_scale,    damage_mean,    damage_sd,
                                  magnitude_mean, magnitude_sd};
                 c.validate();
                 return c;
             }),
             py::arg("soft_threshold"), py::arg("hard_threshold"),
             py::arg("gamma_shape_rate"), py::arg("gamma_scale"),
             py::arg("damage_mean"), py::arg("damage_sd"), py::arg("magnitude_mean"),
             py::arg("magnitude_sd"))
        .def_readwrite("soft_threshold", &ComponentModel::soft_threshold)
        .def_readwrite("hard_threshold", &ComponentModel::hard_threshold)
        .def_readwrite("gamma_shape_rate", &ComponentModel::gamma_shape_rate)
        .def_readwrite("gamma_scale", &ComponentModel::gamma_scale)
        .def_readwrite("damage_mean", &ComponentModel::damage_mean)
        .def_readwrite("damage_sd", &ComponentModel::damage_sd)
        .def_readwrite("magnitude_mean", &ComponentModel::magnitude_mean)
        .def_readwrite("magnitude_sd", &ComponentModel::magnitude_sd);

    py::class_<SystemModel>(m, "SystemModel")
        .def(py::init([](Topology topology, std::vector<ComponentModel> components,
                         double shock_rate) {
                 SystemModel s{topology, std::move(components), ShockProcess{shock_rate}};
                 s.validate();
                 return s;
             }),
             py::arg("topology"), py::arg("components"), py::arg("shock_rate"))
        .def_readwrite("topology", &SystemModel::topology)
        .def_readwrite("components", &SystemModel::components)
        .def_property(
            "shock_rate", [](const SystemModel& s) { return s.shock.rate; },
            [](SystemModel& s, double r) { s.shock.rate = r; });

    py::class_<CostParams>(m, "CostParams")
        .def(py::init([](double inspection, double replacement, double downtime_rate) {
                 CostParams c{inspection, replacement, downtime_rate};
                 c.validate();
                 return c;
             }),
             py::arg("inspection_cost"), py::arg("replacement_cost"),
             py::arg("downtime_cost_rate"))
        .def_readwrite("inspection_cost", &CostParams::inspection_cost)
        .def_readwrite("replacement_cost", &CostParams::replacement_cost)
        .def_readwrite("downtime_cost_rate", &CostParams::downtime_cost_rate);

    py::class_<NumericsConfig>(m, "NumericsConfig")
        .def(py::init<>())
        .def_readwrite("poisson_tail_tol", &NumericsConfig::poisson_tail_tol)
        .def_readwrite("quadrature_order", &NumericsConfig::quadrature_order)
        .def_readwrite("downtime_subintervals", &NumericsConfig::downtime_subintervals)
        .def_readwrite("derivative_rel_step", &NumericsConfig::derivative_rel_step)
        .def_readwrite("gamma_parameterization",
                       &NumericsConfig::gamma_parameterization);

    py::class_<OptimizerConfig>(m, "OptimizerConfig")
        .def(py::init<>())
        .def_readwrite("tau_min", &OptimizerConfig::tau_min)
        .def_readwrite("tau_max", &OptimizerConfig::tau_max)
        .def_readwrite("coarse_grid_points", &OptimizerConfig::coarse_grid_points)
        .def_readwrite("refine_tol", &OptimizerConfig::refine_tol);

    py::class_<ScenarioResult>(m, "ScenarioResult")
        .def_property_readonly("ages",
                               [](const ScenarioResult& r) { return state_list(r.ages); })
        .def_readonly("tau_star", &ScenarioResult::tau_star)
        .def_readonly("cost_rate_at_star", &ScenarioResult::cost_rate_at_star)
        .def_readonly("evaluations", &ScenarioResult::evaluations)
        .def_readonly("boundary_minimum", &ScenarioResult::boundary_minimum)
        .def_readonly("immediate_action", &ScenarioResult::immediate_action)
        .def_readonly("error", &ScenarioResult::error)
        .def("__repr__", [](const ScenarioResult& r) {
            std::ostringstream out;
            out << "ScenarioResult(tau_star=" << r.tau_star
                << ", cost_rate=" << r.cost_rate_at_star << ")";
            return out.str();
        });

    py::class_<ReliabilityPoint>(m, "ReliabilityPoint")
        .def_readonly("time", &ReliabilityPoint::time)
        .def_readonly("estimate", &ReliabilityPoint::estimate)
        .def_readonly("standard_error", &ReliabilityPoint::standard_error);

    py::class_<SimulationPlan>(m, "SimulationPlan")
        .def(py::init<>())
        .def_readwrite("n_paths", &SimulationPlan::n_paths)
        .def_readwrite("time_grid", &SimulationPlan::time_grid)
        .def_readwrite("seed", &SimulationPlan::seed)
        .def_readwrite("threads", &SimulationPlan::threads)
        .def_readwrite("crossing_mesh_density", &SimulationPlan::crossing_mesh_density);

    py::class_<SimulationEstimate>(m, "SimulationEstimate")
        .def_readonly("reliability_at", &SimulationEstimate::reliability_at)
        .def_readonly("expected_downtime", &SimulationEstimate::expected_downtime)
        .def_readonly("expected_downtime_se", &SimulationEstimate::expected_downtime_se);

    py::class_<RunConfig>(m, "RunConfig")
        .def_readwrite("system", &RunConfig::system)
        .def_readwrite("costs", &RunConfig::costs)
        .def_readwrite("numerics", &RunConfig::numerics)
        .def_readwrite("optimizer", &RunConfig::optimizer)
        .def_property_readonly("scenarios", [](const RunConfig& c) {
            std::vector<std::vector<double>> out;
            for (const auto& sv : c.scenarios) {
                out.push_back(state_list(sv));
            }
            return out;
        });

    m.def("poisson_pmf", &poisson_pmf, py::arg("rate"), py::arg("t"), py::arg("m"));
    m.def("poisson_truncation_order", &poisson_truncation_order, py::arg("rate"),
          py::arg("t"), py::arg("tail_tol"));
    m.def("normal_cdf", &normal_cdf, py::arg("x"), py::arg("mean"), py::arg("sd"));
    m.def("gamma_cdf", &gamma_cdf, py::arg("x"), py::arg("shape"), py::arg("scale"));
    m.def("mfold_damage_density", &mfold_damage_density, py::arg("m"),
          py::arg("damage_mean"), py::arg("damage_sd"), py::arg("y"));
    m.def("hard_survival_prob", &hard_survival_prob, py::arg("component"));

    m.def(
        "component_reliability",
        [](const ComponentModel& c, double shock_rate, double t, double age,
           const NumericsConfig& numerics) {
            return component_reliability(c, ShockProcess{shock_rate}, t, {age}, numerics);
        },
        py::arg("component"), py::arg("shock_rate"), py::arg("t"), py::arg("age"),
        py::arg("numerics") = NumericsConfig{});

    m.def(
        "system_reliability",
        [](const SystemModel& sys, double t, const std::vector<double>& ages,
           const NumericsConfig& numerics) {
            return system_reliability(sys, t, make_state(ages), numerics);
        },
        py::arg("system"), py::arg("t"), py::arg("ages"),
        py::arg("numerics") = NumericsConfig{});

    m.def(
        "expected_downtime",
        [](const SystemModel& sys, double tau, const std::vector<double>& ages,
           const NumericsConfig& numerics) {
            return expected_downtime(sys, tau, make_state(ages), numerics);
        },
        py::arg("system"), py::arg("tau"), py::arg("ages"),
        py::arg("numerics") = NumericsConfig{});

    m.def(
        "cost_rate",
        [](const SystemModel& sys, const CostParams& costs, double tau,
           const std::vector<double>& ages, const NumericsConfig& numerics) {
            return cost_rate(sys, costs, tau, make_state(ages), numerics);
        },
        py::arg("system"), py::arg("costs"), py::arg("tau"), py::arg("ages"),
        py::arg("numerics") = NumericsConfig{});

    m.def(
        "optimal_interval",
        [](const SystemModel& sys, const CostParams& costs,
           const std::vector<double>& ages, const OptimizerConfig& cfg,
           const NumericsConfig& numerics) {
            return optimal_interval(sys, costs, make_state(ages), cfg, numerics);
        },
        py::arg("system"), py::arg("costs"), py::arg("ages"),
        py::arg("optimizer") = OptimizerConfig{},
        py::arg("numerics") = NumericsConfig{});

    m.def(
        "scenario_sweep",
        [](const SystemModel& sys, const CostParams& costs,
           const std::vector<std::vector<double>>& scenarios,
           const OptimizerConfig& cfg, const NumericsConfig& numerics) {
            std::vector<StateVector> states;
            states.reserve(scenarios.size());
            for (const auto& s : scenarios) {
                states.push_back(make_state(s));
            }
            return scenario_sweep(sys, costs, states, cfg, numerics);
        },
        py::arg("system"), py::arg("costs"), py::arg("scenarios"),
        py::arg("optimizer") = OptimizerConfig{},
        py::arg("numerics") = NumericsConfig{});

    m.def(
        "simulate_reliability",
        [](const SystemModel& sys, const std::vector<double>& ages,
           const SimulationPlan& plan, const NumericsConfig& numerics) {
            return simulate_reliability(sys, make_state(ages), plan, numerics);
        },
        py::arg("system"), py::arg("ages"), py::arg("plan"),
        py::arg("numerics") = NumericsConfig{});

    m.def(
        "simulate_expected_downtime",
        [](const SystemModel& sys, const std::vector<double>& ages, double tau,
           const SimulationPlan& plan, const NumericsConfig& numerics) {
            return simulate_expected_downtime(sys, make_state(ages), tau, plan, numerics);
        },
        py::arg("system"), py::arg("ages"), py::arg("tau"), py::arg("plan"),
        py::arg("numerics") = NumericsConfig{});

    m.def("load_config", &load_config, py::arg("path"));
    m.def("parse_config", &parse_config, py::arg("json_text"));
    m.def("emit_config", &emit_config, py::arg("config"));
}
