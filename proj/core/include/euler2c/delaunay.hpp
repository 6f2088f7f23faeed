#pragma once

#include "euler2c/types.hpp"

namespace euler2c {

/// Canonical element chart built on the node chain
/// n0 = k x C_t, n1 = C_t x x', n = x' x C.  Conjugate pairs:
/// (Lambda, ell), (G, g), (Theta, vartheta), (Rprime, rprime),
/// (Z, z), (Gtot, gamma).  Angles live in [0, 2*pi).
///
/// Degenerate configurations (circular orbit, orbit normal parallel to x',
/// C_t parallel to k or to x') keep a fixed gauge for the undefined angle
/// and set the matching flag.
struct DelaunayElements {
    double Lambda = 0.0; // sqrt(m a)
    double G = 0.0;      // |C|
    double ell = 0.0;    // mean anomaly
    double g = 0.0;      // pericentre angle from the node n

    double Theta = 0.0;   // C . x'/|x'|
    double vartheta = 0.0;
    double rprime = 0.0;  // |x'|
    double Rprime = 0.0;  // y'.x'/|x'|

    double Z = 0.0;    // C_t . k
    double Gtot = 0.0; // |C_t|
    double z = 0.0;
    double gamma = 0.0;

    ChartFlag flags = ChartFlag::none;

    double semi_major_axis(double m) const { return Lambda * Lambda / m; }
    double eccentricity() const {
        const double q = 1.0 - (G * G) / (Lambda * Lambda);
        return q > 0.0 ? std::sqrt(q) : 0.0;
    }
};

/// Positively oriented angle from u to v as seen from w (right-hand rule),
/// in [0, 2*pi).  u and v must be orthogonal to w.
double oriented_angle(const Vec3& w, const Vec3& u, const Vec3& v);

/// Element extraction.  Requires a bound Keplerian part (energy < 0) and
/// x' != 0; throws DomainError otherwise.  Chart degeneracies come back as
/// flags with a fixed gauge, never as NaN.
DelaunayElements cartesian_to_delaunay(const CartesianState& s, double m);

/// Inverse chart.  Exact inverse of cartesian_to_delaunay away from the
/// flagged degeneracies; with flags set it reconstructs the gauge
/// representative.
CartesianState delaunay_to_cartesian(const DelaunayElements& d, double m);

/// Leading Euler integral in elements:
/// G0 = G^2 + m r' sqrt(1 - Theta^2/G^2) sqrt(1 - G^2/Lambda^2) cos g.
double euler_g0_from_elements(const DelaunayElements& d, double m);

/// Same formula from the bare values, for callers without a full element set.
double euler_g0_from_elements(double rprime, double Lambda, double Theta, double G, double g,
                              double m);

} // namespace euler2c
