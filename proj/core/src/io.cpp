#include "euler2c/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "json.hpp"

namespace euler2c {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t,y1,y2,y3,x1,x2,x3,energy,G,dist_c1,dist_c2\n";
    for (const auto& s : traj.samples) {
        os << format_full(s.t) << ',' << format_full(s.state.y.x) << ','
           << format_full(s.state.y.y) << ',' << format_full(s.state.y.z) << ','
           << format_full(s.state.x.x) << ',' << format_full(s.state.x.y) << ','
           << format_full(s.state.x.z) << ',' << format_full(s.energy) << ','
           << format_full(s.euler_g) << ',' << format_full(s.dist_c1) << ','
           << format_full(s.dist_c2) << '\n';
    }
}

void write_conservation_json(std::ostream& os, const DriftReport& report,
                             const IntegratorStats& stats) {
    nlohmann::json j;
    for (const auto& [name, drift] : report) j[name] = drift;
    j["integrator"]["tol"] = stats.tol;
    j["integrator"]["accepted_steps"] = stats.accepted;
    j["integrator"]["rejected_steps"] = stats.rejected;
    j["integrator"]["collision_event"] = stats.collision_event;
    j["integrator"]["t_end"] = stats.t_end;
    os << j.dump(2) << '\n';
}

void write_level_csv(std::ostream& os, const LevelCurve& curve) {
    os << "g,G_over_Lambda\n";
    for (const auto& p : curve.points)
        os << format_full(p.g) << ',' << format_full(p.G_over_Lambda) << '\n';
}

namespace {

struct SvgMapper {
    double width = 900, height = 460, margin = 50;
    double map_x(double g) const {
        return margin + g / (2.0 * std::numbers::pi) * (width - 2 * margin);
    }
    double map_y(double u) const { // u in [-1, 1]
        return height - margin - (u + 1.0) / 2.0 * (height - 2 * margin);
    }
};

void emit_polyline(std::ostream& os, const SvgMapper& view, const std::vector<LevelPoint>& pts,
                   double sign, const std::string& style) {
    if (pts.size() < 2) return;
    os << "  <polyline fill=\"none\" " << style << " points=\"";
    for (const auto& p : pts)
        os << view.map_x(p.g) << ',' << view.map_y(sign * p.G_over_Lambda) << ' ';
    os << "\"/>\n";
}

} // namespace

void write_portrait_svg(std::ostream& os, double delta, const std::vector<LevelCurve>& curves) {
    SvgMapper view;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << view.width << "\" height=\""
       << view.height << "\" viewBox=\"0 0 " << view.width << ' ' << view.height << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes: g in [0, 2pi], G/Lambda in [-1, 1]
    os << "  <line x1=\"" << view.map_x(0) << "\" y1=\"" << view.map_y(0) << "\" x2=\""
       << view.map_x(2 * std::numbers::pi) << "\" y2=\"" << view.map_y(0)
       << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    os << "  <line x1=\"" << view.map_x(0) << "\" y1=\"" << view.map_y(-1) << "\" x2=\""
       << view.map_x(0) << "\" y2=\"" << view.map_y(1)
       << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    os << "  <text x=\"" << view.width / 2 << "\" y=\"" << view.height - 12
       << "\" font-size=\"14\" text-anchor=\"middle\">g</text>\n";
    os << "  <text x=\"14\" y=\"" << view.height / 2
       << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
       << view.height / 2 << ")\">G/Lambda</text>\n";
    os << "  <text x=\"" << view.width - view.margin << "\" y=\"20\" font-size=\"13\" "
       << "text-anchor=\"end\">delta=" << delta << "</text>\n";

    for (const auto& curve : curves) {
        const bool sep = curve.kind == MotionClass::separatrix;
        const std::string style = sep
            ? "stroke=\"#c00\" stroke-width=\"2\" stroke-dasharray=\"6 3\""
            : "stroke=\"#246\" stroke-width=\"1.4\"";
        emit_polyline(os, view, curve.points, +1.0, style);
        emit_polyline(os, view, curve.points, -1.0, style);
    }

    for (const auto& eq : equilibria(delta)) {
        if (eq.level > 1.0) continue; // outside the drawn window
        const char* fill = eq.stable ? "#246" : "#c00";
        for (double sign : {+1.0, -1.0}) {
            os << "  <circle cx=\"" << view.map_x(eq.g) << "\" cy=\""
               << view.map_y(sign * eq.G_over_Lambda) << "\" r=\"4\" fill=\"" << fill
               << "\"/>\n";
            if (eq.G_over_Lambda == 0.0) break;
        }
        // the saddle repeats at g = 2 pi
        if (eq.g == 0.0)
            os << "  <circle cx=\"" << view.map_x(2 * std::numbers::pi) << "\" cy=\""
               << view.map_y(eq.G_over_Lambda) << "\" r=\"4\" fill=\"" << fill << "\"/>\n";
    }
    os << "</svg>\n";
}

void write_secular_comparison_csv(std::ostream& os,
                                  const std::vector<SecularComparisonRow>& rows) {
    os << "t,g_secular,g_direct,G_secular,G_direct,abs_err_g\n";
    for (const auto& r : rows) {
        os << format_full(r.t) << ',' << format_full(r.g_secular) << ','
           << format_full(r.g_direct) << ',' << format_full(r.G_secular) << ','
           << format_full(r.G_direct) << ','
           << format_full(std::abs(r.g_secular - r.g_direct)) << '\n';
    }
}

void write_risk_json(std::ostream& os, const RiskReport& report) {
    nlohmann::json j;
    j["g0"] = report.g0;
    j["level"] = report.level;
    j["distance_normalized"] = report.distance_normalized;
    j["classification"] = report.classification == RiskClass::at_risk ? "at_risk" : "safe";
    if (report.crossing) {
        j["crossing_anomaly"]["true"] = report.crossing->true_anomaly;
        j["crossing_anomaly"]["eccentric"] = report.crossing->eccentric_anomaly;
        j["crossing_anomaly"]["mean"] = report.crossing->mean_anomaly;
    }
    os << j.dump(2) << '\n';
}

} // namespace euler2c
