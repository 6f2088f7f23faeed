#pragma once

#include <vector>

#include "euler2c/quadrature.hpp"
#include "euler2c/types.hpp"

namespace euler2c {

/// Arguments of the averaged perturbing potential.  Only the value of the
/// leading Euler integral enters, not (G, g) separately.
struct SecularPoint {
    double rprime = 0.0;
    double Lambda = 1.0;
    double Theta = 0.0;
    double G0 = 0.0;

    double ecc_factor() const { return std::sqrt(Lambda * Lambda - G0) / Lambda; }
    double incl_factor() const { return std::sqrt(G0 - Theta * Theta) / Lambda; }
};

/// Mean over the eccentric anomaly of -1/|x' - x| on the orbit with elements
/// (Lambda, G0, Theta) evaluated on the g = pi/2 section; always <= 0.
/// Uniform trapezoid with node doubling to rel_tol (spectral for this
/// periodic integrand).  Throws if G0 leaves [Theta^2, Lambda^2] or the
/// orbit comes closer than `guard` to the second centre.
QuadratureResult averaged_potential_quad(const SecularPoint& pt, double a, int n0 = 64,
                                         double rel_tol = 1e-11, double guard = 1e-6);
double averaged_potential(const SecularPoint& pt, double a, int n0 = 64);

/// Second-order expansion in r'/a:
/// -(1/a) [1 - (r'^2/4a^2) Lambda^3 (3 Theta^2 - G0) / G0^(5/2)].
/// The residual against the quadrature is O((r'/a)^4).
double averaged_potential_series(const SecularPoint& pt, double a);

/// Stationary values of the averaged potential in G0, located by bracketed
/// bisection on the central-difference derivative (step 1e-5 Lambda^2) over
/// the admissible interval (Theta^2, Lambda^2).  g_section = sqrt(g0) is the
/// value on the angular-momentum scale, which approaches sqrt(5)|Theta| as
/// r'/a -> 0.
struct SecularFixedPoint {
    double g0 = 0.0;
    double g_section = 0.0;
    double residual = 0.0;
};
std::vector<SecularFixedPoint> secular_fixed_points(double rprime, double Lambda, double Theta,
                                                    double a, int grid = 128);

/// Slow variables of the first-order normalized flow.
struct SecularState {
    double rprime = 0.0;
    double Lambda = 1.0;
    double Theta = 0.0;
    double Rprime = 0.0;
    double G = 0.0;
    double g = 0.0;
    double ell = 0.0;
    double vartheta = 0.0;
};

/// First-order secular propagation: (r', Lambda, Theta) frozen; (G, g)
/// advanced along the G0-level flow with the time rescaled by
/// rho * eps * dU/dG0; (R', ell, vartheta) advanced linearly with the
/// derivative combinations frozen at the initial point (ell additionally
/// carries the Keplerian mean motion rho m / Lambda^3).
///
/// Planar backend: requires Theta = 0.  Initial data within 1e-6 of the
/// separatrix level (G0/Lambda^2 = r'/a) is rejected.
/// rho = 1 recovers the plain two-centre averaged flow.
SecularState first_order_secular_flow(const SecularState& s0, double m, double eps, double rho,
                                      double t);

} // namespace euler2c
