#include "euler2c/collision.hpp"

#include <cmath>

#include "euler2c/kepler.hpp"

namespace euler2c {

double collision_level(double m, double rprime) {
    if (!(m > 0.0 && rprime > 0.0)) throw DomainError("collision_level: need m, r' > 0");
    return m * rprime;
}

std::optional<ConicCrossing> conic_crossing(const DelaunayElements& d, double m) {
    if (std::abs(d.Theta) > 1e-9 * d.G)
        throw DomainError("conic_crossing: planar elements required (Theta = 0)");
    const double a = d.semi_major_axis(m);
    const double e = d.eccentricity();
    if (e < 1e-12) {
        if (std::abs(d.rprime - a) > 1e-12 * a) return std::nullopt;
        ConicCrossing c; // circle on the circle: every anomaly crosses; report 0
        return c;
    }
    const double cos_theta = (a * (1.0 - e * e) / d.rprime - 1.0) / e;
    if (std::abs(cos_theta) > 1.0) return std::nullopt;
    ConicCrossing c;
    c.true_anomaly = std::acos(cos_theta);
    c.eccentric_anomaly = eccentric_from_true(e, c.true_anomaly);
    c.mean_anomaly = mean_from_eccentric(e, c.eccentric_anomaly);
    return c;
}

RiskReport classify_risk(const DelaunayElements& d, double m, double margin) {
    RiskReport r;
    r.g0 = euler_g0_from_elements(d, m);
    r.level = collision_level(m, d.rprime);
    r.distance_normalized = std::abs(r.g0 - r.level) / (d.Lambda * d.Lambda);
    r.classification = r.distance_normalized < margin ? RiskClass::at_risk : RiskClass::safe;
    r.crossing = conic_crossing(d, m);
    return r;
}

} // namespace euler2c
