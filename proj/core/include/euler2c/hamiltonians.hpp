#pragma once

#include <variant>

#include "euler2c/types.hpp"

namespace euler2c {

/// Two fixed centres: mass 1 at the origin, mass eps at state.xprime.
struct TwoCentreParams {
    double m = 1.0;
    double eps = 0.0;
};

/// Symmetric form: mass m_plus at -x0, mass m_minus at +x0, unit reduced mass.
struct SymmetricParams {
    Vec3 x0;
    double m_plus = 0.5;
    double m_minus = 0.5;
};

/// Rescaled heliocentric three-body model (star 1, planet eps, asteroid mu);
/// state.(yprime, xprime) is the planet pair, state.(y, x) the asteroid pair.
struct SeaParams {
    double eps = 0.0;
    double mu = 0.0;

    double rho() const {
        if (eps <= 0.0) throw DomainError("SeaParams: eps must be positive");
        return mu / eps;
    }
    double m_planet() const { return 1.0 / (1.0 + eps); }
    double m_asteroid() const { return 1.0 / (1.0 + mu); }
};

using ModelSpec = std::variant<TwoCentreParams, SymmetricParams, SeaParams>;

inline constexpr double kDefaultGuardRadius = 1e-6;

/// h = |y|^2/(2m) - 1/|x| - eps/|x'-x|.
double two_centre_hamiltonian(const CartesianState& s, const TwoCentreParams& p,
                              double guard = kDefaultGuardRadius);

/// h_sim = |y|^2/2 - m+/|x+x0| - m-/|x-x0|.
double symmetric_hamiltonian(const CartesianState& s, const SymmetricParams& p,
                             double guard = kDefaultGuardRadius);

/// Additive split of the rescaled three-body Hamiltonian:
/// total = h0 + rho*h1 + rho^2*f with h0 = -1/|x'|, h1 the two-centre part
/// seen by the asteroid, f = |y'|^2/(2 m') + eps y'.y.
struct SeaSplit {
    double h0 = 0.0;
    double rho_h1 = 0.0;
    double rho2_f = 0.0;

    double total() const { return h0 + rho_h1 + rho2_f; }
};

SeaSplit sea_hamiltonian(const CartesianState& s, const SeaParams& p,
                         double guard = kDefaultGuardRadius);

/// Direct evaluation of the unrescaled three-body Hamiltonian composed with
/// the (mu y', mu y, x', x) scaling and the 1/eps factor.  Dual route to
/// SeaSplit::total() for cross-checks.
double sea_hamiltonian_direct(const CartesianState& s, const SeaParams& p,
                              double guard = kDefaultGuardRadius);

/// Value of whichever Hamiltonian the model selects.
double hamiltonian(const CartesianState& s, const ModelSpec& model,
                   double guard = kDefaultGuardRadius);

/// Hamilton's equations, analytic gradients.  Centres that do not move get
/// zero derivatives.
CartesianState equations_of_motion(const CartesianState& s, const ModelSpec& model);

/// Smallest of the distances that must stay positive for the model.
double min_separation(const CartesianState& s, const ModelSpec& model);

/// The two centre distances recorded as trajectory diagnostics.
struct CentreDistances {
    double c1 = 0.0;
    double c2 = 0.0;
};
CentreDistances centre_distances(const CartesianState& s, const ModelSpec& model);

} // namespace euler2c
