#pragma once

#include <map>
#include <string>

#include "euler2c/integrate.hpp"
#include "euler2c/types.hpp"

namespace euler2c {

/// C = x x y.
Vec3 angular_momentum(const CartesianState& s);

/// L = y x C - m x/|x|.  Related to the scalar eccentricity and the
/// pericentre direction by L = m e P.
Vec3 eccentricity_vector(const CartesianState& s, double m);

/// Leading part of the Euler integral: |C|^2 - x'.L.  When e < 1e-12 the
/// pericentre direction is undefined and the x'.L term is dropped exactly.
double euler_integral_g0(const CartesianState& s, double m);

/// Perturbing part: m (x'-x).x' / |x'-x|.
double euler_integral_g1(const CartesianState& s, double m);

/// Full Euler integral G0 + eps G1 of the asymmetric two-centre Hamiltonian.
double euler_integral(const CartesianState& s, double m, double eps);

/// Euler integral of the symmetric form with centres at -x0 (mass m_plus)
/// and +x0 (mass m_minus):
/// |x x y|^2 + (x0.y)^2 + 2 x.x0 (m+/|x+x0| - m-/|x-x0|).
double euler_integral_symmetric(const Vec3& y, const Vec3& x, const Vec3& x0, double m_plus,
                                double m_minus);

/// The four commuting integrals plus the Euler pieces and the energy.
struct IntegralSet {
    double Z = 0.0;        // C_t . k
    double Gtot = 0.0;     // |C_t|
    double Theta = 0.0;    // C . x'/|x'|
    double rprime = 0.0;   // |x'|
    double G_norm = 0.0;   // |C|
    double G0 = 0.0;
    double G1 = 0.0;
    double G = 0.0;
    double energy = 0.0;
    ChartFlag flags = ChartFlag::none; // node degeneracies
};

IntegralSet commuting_integrals(const CartesianState& s, const MassParams& p);

/// Max relative drift per integral along a trajectory:
/// max_t |f(t) - f(0)| / max(1, |f(0)|), keyed by integral name.
using DriftReport = std::map<std::string, double>;

DriftReport conservation_report(const Trajectory& traj, const ModelSpec& model);

} // namespace euler2c
