#pragma once

#include <optional>
#include <string>

#include "euler2c/delaunay.hpp"

namespace euler2c {

/// G0 value of the collision/separatrix set: m r'.  Normalized by Lambda^2
/// this is r'/a, the portrait's delta.
double collision_level(double m, double rprime);

/// Anomalies at which the orbit conic reaches radius r'.
struct ConicCrossing {
    double true_anomaly = 0.0;      // theta in [0, pi]; -theta crosses too
    double eccentric_anomaly = 0.0;
    double mean_anomaly = 0.0;
};

/// Solves 1 + e cos(theta) = a (1 - e^2) / r' for the crossing anomaly.
/// Empty when the radius r' is outside [pericentre, apocentre].  A circular
/// orbit crosses only when r' = a (within 1e-12 relative).  Requires planar
/// elements (Theta = 0); spatial input throws.
std::optional<ConicCrossing> conic_crossing(const DelaunayElements& d, double m);

enum class RiskClass { safe, at_risk };

struct RiskReport {
    double g0 = 0.0;
    double level = 0.0;               // m r'
    double distance_normalized = 0.0; // |G0 - m r'| / Lambda^2
    RiskClass classification = RiskClass::safe;
    std::optional<ConicCrossing> crossing;
};

/// at_risk iff the normalized distance of G0 from the collision level is
/// below the margin.  The margin has no default in the library; pick one
/// explicitly (the CLI defaults to 0.05).
RiskReport classify_risk(const DelaunayElements& d, double m, double margin);

} // namespace euler2c
