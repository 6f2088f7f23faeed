#include "doctest.h"

#include <sstream>

#include "euler2c/io.hpp"
#include "json.hpp"

using namespace euler2c;

TEST_CASE("17-digit formatting round-trips doubles exactly") {
    for (double v : {0.1, -1.0 / 3.0, 123456.789e-12, 2.0 * std::numbers::pi}) {
        CHECK(std::stod(format_full(v)) == v);
    }
}

TEST_CASE("trajectory CSV header and shape") {
    Trajectory traj;
    TrajectorySample s;
    s.t = 0.5;
    s.state = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    s.energy = -0.5;
    s.euler_g = 1.25;
    s.dist_c1 = 4.0;
    s.dist_c2 = 5.0;
    traj.samples.push_back(s);

    std::ostringstream os;
    write_trajectory_csv(os, traj);
    std::istringstream is(os.str());
    std::string header, row;
    std::getline(is, header);
    CHECK(header == "t,y1,y2,y3,x1,x2,x3,energy,G,dist_c1,dist_c2");
    std::getline(is, row);
    CHECK(row == "0.5,1,2,3,4,5,6,-0.5,1.25,4,5");
}

TEST_CASE("conservation report serializes drift and integrator blocks") {
    DriftReport report{{"energy", 1e-12}, {"G", 2e-10}};
    IntegratorStats stats;
    stats.tol = 1e-10;
    stats.accepted = 100;
    stats.rejected = 3;
    std::ostringstream os;
    write_conservation_json(os, report, stats);
    const auto j = nlohmann::json::parse(os.str());
    CHECK(j["energy"] == 1e-12);
    CHECK(j["G"] == 2e-10);
    CHECK(j["integrator"]["accepted_steps"] == 100);
    CHECK(j["integrator"]["collision_event"] == false);
}

TEST_CASE("risk JSON carries the optional crossing") {
    RiskReport r;
    r.g0 = 0.7;
    r.level = 0.5;
    r.distance_normalized = 0.2;
    r.classification = RiskClass::safe;
    std::ostringstream os;
    write_risk_json(os, r);
    auto j = nlohmann::json::parse(os.str());
    CHECK(j["classification"] == "safe");
    CHECK(!j.contains("crossing_anomaly"));

    r.crossing = ConicCrossing{1.0, 0.8, 0.6};
    r.classification = RiskClass::at_risk;
    std::ostringstream os2;
    write_risk_json(os2, r);
    j = nlohmann::json::parse(os2.str());
    CHECK(j["classification"] == "at_risk");
    CHECK(j["crossing_anomaly"]["true"] == 1.0);
}

TEST_CASE("portrait SVG contains the level fan") {
    std::vector<LevelCurve> curves;
    curves.push_back(level_curve({0.5, 0.25, 1.0}, 64));
    curves.push_back(level_curve({0.5, 0.5, 1.0}, 64));  // separatrix
    curves.push_back(level_curve({0.5, 0.75, 1.0}, 64)); // rotation
    std::ostringstream os;
    write_portrait_svg(os, 0.5, curves);
    const std::string svg = os.str();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos); // separatrix styling
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("level CSV header") {
    std::ostringstream os;
    write_level_csv(os, level_curve({0.5, 0.25, 1.0}, 16));
    CHECK(os.str().substr(0, 15) == "g,G_over_Lambda");
}

TEST_CASE("secular comparison CSV") {
    std::vector<SecularComparisonRow> rows{{0.0, 1.0, 1.01, 0.8, 0.8}};
    std::ostringstream os;
    write_secular_comparison_csv(os, rows);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "t,g_secular,g_direct,G_secular,G_direct,abs_err_g");
}
