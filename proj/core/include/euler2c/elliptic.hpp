#pragma once

#include "euler2c/types.hpp"

namespace euler2c {

/// Reduced chart for the symmetric two-centre problem: radial pair (R, r),
/// angular-momentum pair (Phi, phi), with Theta (momentum about the focal
/// axis) and r0 = |x0| carried as parameters.
struct PChartState {
    double R = 0.0;   // y.x/|x|
    double Phi = 0.0; // |C|
    double r = 0.0;   // |x|
    double phi = 0.0; // angle of C x x from the node x0 x C, about C
    double Theta = 0.0;
    double r0 = 0.0;
};

/// Prolate-elliptic coordinates with foci at -x0 (mass m+) and +x0 (mass m-):
/// lambda = (r+ + r-)/(2 r0) >= 1, mu = (r+ - r-)/(2 r0) in [-1, 1].
struct EllipticState {
    double p_lambda = 0.0;
    double p_mu = 0.0;
    double lambda = 1.0;
    double mu = 0.0;
    double Theta = 0.0;
    double r0 = 0.0;
    ChartFlag flags = ChartFlag::none;
};

/// Extracts the reduced chart from a Cartesian state (x0 the half-separation
/// vector of the centres).
PChartState pchart_from_cartesian(const Vec3& y, const Vec3& x, const Vec3& x0);

/// Chart maps.  The momentum formulas hold on each of the two leaves
/// sin(phi) > 0 / sin(phi) < 0 separately; the leaf tag is recovered from
/// sign(lambda p_mu - mu p_lambda) on the way back.  Points with lambda ~ 1
/// or |mu| ~ 1 are flagged elliptic_boundary (the momenta are singular there).
EllipticState elliptic_from_pchart(const PChartState& p);
PChartState pchart_from_elliptic(const EllipticState& e);

/// h_sim in the reduced chart: R^2/2 + Phi^2/(2 r^2) - m+/r+ - m-/r-.
double pchart_hamiltonian(const PChartState& p, double m_plus, double m_minus);

/// h_sim in elliptic coordinates (the separable form).
double elliptic_hamiltonian(const EllipticState& e, double m_plus, double m_minus);

/// Hamilton-Jacobi separation constants.  On any h_sim trajectory with
/// E = h_sim both sides coincide and equal the symmetric Euler integral.
struct HjSplit {
    double F_mu = 0.0;
    double F_lambda = 0.0;
};
HjSplit hamilton_jacobi_split(const EllipticState& e, double E, double m_plus, double m_minus);

} // namespace euler2c
