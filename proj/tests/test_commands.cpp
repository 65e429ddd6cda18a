#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "relinspect/commands.hpp"

using namespace relinspect;

namespace {

const std::string kConfigDir = RELINSPECT_CONFIG_DIR;

RunConfig series_config() { return load_config(kConfigDir + "/series3.json"); }

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

TEST_CASE("csv value formatting") {
    CHECK(format_csv_value(1.0) == "1");
    CHECK(format_csv_value(0.5) == "0.5");
    CHECK(format_csv_value(0.995400394996851) == "0.995400394997");
    CHECK(format_csv_value(2.5e-3) == "0.0025");
}

TEST_CASE("reliability command emits one row per time") {
    const auto config = series_config();
    const StateVector fresh{{{0.0}, {0.0}, {0.0}}};
    std::ostringstream out;
    cmd_reliability(config, fresh, {1.0, 2.0, 3.3}, out);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "t,R_system,R_component_1,R_component_2,R_component_3");
    CHECK(lines[3].substr(0, 4) == "3.3,");
    // values parse back at printed precision
    std::istringstream row(lines[3]);
    std::string cell;
    std::getline(row, cell, ',');
    CHECK(std::stod(cell) == 3.3);
    std::getline(row, cell, ',');
    CHECK(std::stod(cell) == doctest::Approx(0.995315430934).epsilon(1e-10));
}

TEST_CASE("reliability command validates inputs") {
    const auto config = series_config();
    std::ostringstream out;
    CHECK_THROWS_AS(cmd_reliability(config, {{{0.0}, {0.0}}}, {1.0}, out), ConfigError);
    const StateVector fresh{{{0.0}, {0.0}, {0.0}}};
    CHECK_THROWS_AS(cmd_reliability(config, fresh, {2.0, 1.0}, out),
                    std::invalid_argument);
    CHECK_THROWS_AS(cmd_reliability(config, fresh, {}, out), std::invalid_argument);
}

TEST_CASE("cost curve command") {
    const auto config = series_config();
    const StateVector fresh{{{0.0}, {0.0}, {0.0}}};
    std::ostringstream out;
    cmd_cost_curve(config, fresh, {1.0, 3.3, 6.0}, out);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "tau,cost_rate");
    std::istringstream row(lines[2]);
    std::string cell;
    std::getline(row, cell, ',');
    std::getline(row, cell, ',');
    CHECK(std::stod(cell) == doctest::Approx(1.56964181832).epsilon(1e-9));
}

TEST_CASE("optimize command single row") {
    auto config = series_config();
    config.optimizer.coarse_grid_points = 120;
    std::ostringstream out;
    cmd_optimize(config, {{{25.0}, {0.0}, {0.0}}}, out);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "scenario,u_1,u_2,u_3,tau_star,cost_rate,evaluations,flags");
    CHECK(lines[1].find("immediate_action") != std::string::npos);
}

TEST_CASE("table command, one row per scenario") {
    auto config = series_config();
    config.optimizer.coarse_grid_points = 60;
    config.optimizer.refine_tol = 1e-3;
    const std::vector<StateVector> scenarios = {
        {{{0.0}, {0.0}, {0.0}}},
        {{{10.0}, {10.0}, {10.0}}},
    };
    std::ostringstream out;
    cmd_table(config, scenarios, out);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 3);
    CHECK(lines[1].substr(0, 8) == "1,0,0,0,");
    CHECK(lines[2].substr(0, 11) == "2,10,10,10,");
}

TEST_CASE("simulate command is byte-stable for a fixed seed") {
    const auto config = series_config();
    const StateVector fresh{{{0.0}, {0.0}, {0.0}}};
    std::ostringstream a;
    std::ostringstream b;
    cmd_simulate(config, fresh, 2000, 99, 3.3, 0, {}, a);
    cmd_simulate(config, fresh, 2000, 99, 3.3, 0, {}, b);
    CHECK(a.str() == b.str());
    const auto lines = lines_of(a.str());
    REQUIRE(lines.size() == 12);  // header + 10 reliability rows + downtime row
    CHECK(lines[0] == "quantity,t,analytic,mc_estimate,mc_standard_error");
    CHECK(lines[11].substr(0, 18) == "expected_downtime,");
    // different seed changes the bytes
    std::ostringstream c;
    cmd_simulate(config, fresh, 2000, 100, 3.3, 0, {}, c);
    CHECK(a.str() != c.str());
}
