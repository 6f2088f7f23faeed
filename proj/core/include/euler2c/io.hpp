#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "euler2c/collision.hpp"
#include "euler2c/first_integrals.hpp"
#include "euler2c/integrate.hpp"
#include "euler2c/portrait.hpp"

namespace euler2c {

/// Formats a double with 17 significant digits (lossless round-trip).
std::string format_full(double v);

/// Header `t,y1,y2,y3,x1,x2,x3,energy,G,dist_c1,dist_c2`, 17 significant
/// digits per column.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

/// JSON object keyed by integral name with the max relative drifts, plus an
/// integrator block (tolerance, step counts, collision flag).
void write_conservation_json(std::ostream& os, const DriftReport& report,
                             const IntegratorStats& stats);

/// Per-level CSV `g,G_over_Lambda`.
void write_level_csv(std::ostream& os, const LevelCurve& curve);

/// Level fan of the planar portrait as a standalone SVG: libration and
/// rotation levels, the separatrix drawn dashed, equilibria marked.  Curves
/// are mirrored to negative G.
void write_portrait_svg(std::ostream& os, double delta, const std::vector<LevelCurve>& curves);

/// CSV `t,g_secular,g_direct,G_secular,G_direct,abs_err_g`.
struct SecularComparisonRow {
    double t = 0.0;
    double g_secular = 0.0;
    double g_direct = 0.0;
    double G_secular = 0.0;
    double G_direct = 0.0;
};
void write_secular_comparison_csv(std::ostream& os, const std::vector<SecularComparisonRow>& rows);

/// Risk report JSON: {g0, level, distance_normalized, classification,
/// crossing_anomaly?}.
void write_risk_json(std::ostream& os, const RiskReport& report);

} // namespace euler2c
