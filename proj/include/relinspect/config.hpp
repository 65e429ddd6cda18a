#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "relinspect/optimize.hpp"

namespace relinspect {

/// Config file problems: parse failures and invariant breaches alike.
/// Messages name the offending field path.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything one run needs, loaded from a single JSON document.
struct RunConfig {
    SystemModel system;
    CostParams costs;
    NumericsConfig numerics;
    OptimizerConfig optimizer;
    std::vector<StateVector> scenarios;  // optional in the file

    void validate() const;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

/// Inverse of parse_config: load_config(emit_config(c)) round-trips.
std::string emit_config(const RunConfig& config);

}  // namespace relinspect
