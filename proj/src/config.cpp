#include "relinspect/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace relinspect {

using nlohmann::json;

void RunConfig::validate() const {
    try {
        system.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("system.") + e.what());
    }
    try {
        costs.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("costs.") + e.what());
    }
    try {
        numerics.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    try {
        optimizer.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    for (std::size_t s = 0; s < scenarios.size(); ++s) {
        if (scenarios[s].ages.size() != system.components.size()) {
            throw ConfigError("scenarios[" + std::to_string(s) + "]: has " +
                              std::to_string(scenarios[s].ages.size()) +
                              " ages but the system has " +
                              std::to_string(system.components.size()) + " components");
        }
        for (std::size_t i = 0; i < scenarios[s].ages.size(); ++i) {
            if (scenarios[s].ages[i].initial_degradation < 0.0) {
                throw ConfigError("scenarios[" + std::to_string(s) + "][" +
                                  std::to_string(i) + "]: age must be >= 0");
            }
        }
    }
}

namespace {

double get_num(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) {
        throw ConfigError(path + "." + key + ": missing required field");
    }
    if (!j.at(key).is_number()) {
        throw ConfigError(path + "." + key + ": must be a number");
    }
    return j.at(key).get<double>();
}

ComponentModel parse_component(const json& j, const std::string& path) {
    if (!j.is_object()) {
        throw ConfigError(path + ": must be an object");
    }
    ComponentModel c{};
    c.soft_threshold = get_num(j, path, "soft_threshold");
    c.hard_threshold = get_num(j, path, "hard_threshold");
    c.gamma_shape_rate = get_num(j, path, "gamma_shape_rate");
    c.gamma_scale = get_num(j, path, "gamma_scale");
    c.damage_mean = get_num(j, path, "damage_mean");
    c.damage_sd = get_num(j, path, "damage_sd");
    c.magnitude_mean = get_num(j, path, "magnitude_mean");
    c.magnitude_sd = get_num(j, path, "magnitude_sd");
    return c;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("system")) {
        throw ConfigError("system: missing required section");
    }

    RunConfig cfg;
    const json& sys = j.at("system");
    if (!sys.contains("topology") || !sys.at("topology").is_string()) {
        throw ConfigError("system.topology: missing or not a string");
    }
    try {
        cfg.system.topology = topology_from_string(sys.at("topology").get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("system.") + e.what());
    }
    cfg.system.shock.rate = get_num(sys, "system", "shock_rate");
    if (!sys.contains("components") || !sys.at("components").is_array()) {
        throw ConfigError("system.components: missing or not an array");
    }
    const json& comps = sys.at("components");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        cfg.system.components.push_back(
            parse_component(comps.at(i), "system.components[" + std::to_string(i) + "]"));
    }

    if (!j.contains("costs")) {
        throw ConfigError("costs: missing required section");
    }
    const json& costs = j.at("costs");
    cfg.costs.inspection_cost = get_num(costs, "costs", "inspection_cost");
    cfg.costs.replacement_cost = get_num(costs, "costs", "replacement_cost");
    cfg.costs.downtime_cost_rate = get_num(costs, "costs", "downtime_cost_rate");

    if (j.contains("numerics")) {
        const json& num = j.at("numerics");
        if (num.contains("poisson_tail_tol"))
            cfg.numerics.poisson_tail_tol = get_num(num, "numerics", "poisson_tail_tol");
        if (num.contains("quadrature_order"))
            cfg.numerics.quadrature_order =
                static_cast<int>(get_num(num, "numerics", "quadrature_order"));
        if (num.contains("downtime_subintervals"))
            cfg.numerics.downtime_subintervals =
                static_cast<int>(get_num(num, "numerics", "downtime_subintervals"));
        if (num.contains("derivative_rel_step"))
            cfg.numerics.derivative_rel_step =
                get_num(num, "numerics", "derivative_rel_step");
        if (num.contains("gamma_parameterization")) {
            try {
                cfg.numerics.gamma_parameterization = gamma_parameterization_from_string(
                    num.at("gamma_parameterization").get<std::string>());
            } catch (const std::exception& e) {
                throw ConfigError(std::string("numerics.") + e.what());
            }
        }
    }

    if (j.contains("optimizer")) {
        const json& opt = j.at("optimizer");
        if (opt.contains("tau_min"))
            cfg.optimizer.tau_min = get_num(opt, "optimizer", "tau_min");
        if (opt.contains("tau_max"))
            cfg.optimizer.tau_max = get_num(opt, "optimizer", "tau_max");
        if (opt.contains("coarse_grid_points"))
            cfg.optimizer.coarse_grid_points =
                static_cast<int>(get_num(opt, "optimizer", "coarse_grid_points"));
        if (opt.contains("refine_tol"))
            cfg.optimizer.refine_tol = get_num(opt, "optimizer", "refine_tol");
    }

    if (j.contains("scenarios")) {
        const json& scen = j.at("scenarios");
        if (!scen.is_array()) {
            throw ConfigError("scenarios: must be an array of age arrays");
        }
        for (std::size_t s = 0; s < scen.size(); ++s) {
            if (!scen.at(s).is_array()) {
                throw ConfigError("scenarios[" + std::to_string(s) +
                                  "]: must be an array of ages");
            }
            StateVector sv;
            for (const auto& v : scen.at(s)) {
                if (!v.is_number()) {
                    throw ConfigError("scenarios[" + std::to_string(s) +
                                      "]: ages must be numbers");
                }
                sv.ages.push_back({v.get<double>()});
            }
            cfg.scenarios.push_back(std::move(sv));
        }
    }

    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string emit_config(const RunConfig& config) {
    json j;
    j["system"]["topology"] = to_string(config.system.topology);
    j["system"]["shock_rate"] = config.system.shock.rate;
    json comps = json::array();
    for (const auto& c : config.system.components) {
        comps.push_back({{"soft_threshold", c.soft_threshold},
                         {"hard_threshold", c.hard_threshold},
                         {"gamma_shape_rate", c.gamma_shape_rate},
                         {"gamma_scale", c.gamma_scale},
                         {"damage_mean", c.damage_mean},
                         {"damage_sd", c.damage_sd},
                         {"magnitude_mean", c.magnitude_mean},
                         {"magnitude_sd", c.magnitude_sd}});
    }
    j["system"]["components"] = std::move(comps);
    j["costs"] = {{"inspection_cost", config.costs.inspection_cost},
                  {"replacement_cost", config.costs.replacement_cost},
                  {"downtime_cost_rate", config.costs.downtime_cost_rate}};
    j["numerics"] = {
        {"poisson_tail_tol", config.numerics.poisson_tail_tol},
        {"quadrature_order", config.numerics.quadrature_order},
        {"downtime_subintervals", config.numerics.downtime_subintervals},
        {"derivative_rel_step", config.numerics.derivative_rel_step},
        {"gamma_parameterization", to_string(config.numerics.gamma_parameterization)}};
    j["optimizer"] = {{"tau_min", config.optimizer.tau_min},
                      {"tau_max", config.optimizer.tau_max},
                      {"coarse_grid_points", config.optimizer.coarse_grid_points},
                      {"refine_tol", config.optimizer.refine_tol}};
    if (!config.scenarios.empty()) {
        json scen = json::array();
        for (const auto& sv : config.scenarios) {
            json ages = json::array();
            for (const auto& a : sv.ages) {
                ages.push_back(a.initial_degradation);
            }
            scen.push_back(std::move(ages));
        }
        j["scenarios"] = std::move(scen);
    }
    return j.dump(2) + "\n";
}

}  // namespace relinspect
