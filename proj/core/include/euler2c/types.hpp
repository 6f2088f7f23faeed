#pragma once

#include <stdexcept>
#include <string>

#include "euler2c/vec3.hpp"

namespace euler2c {

/// Thrown when an evaluation leaves its mathematical domain
/// (collision distance below guard, hyperbolic input to a bound-orbit map, ...).
class DomainError : public std::domain_error {
  public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when the adaptive integrator cannot continue (step-size underflow).
class IntegrationError : public std::runtime_error {
  public:
    explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

/// Chart degeneracies.  Conversions never return NaN for an undefined angle;
/// they pick a fixed gauge, set the matching flag, and leave the caller to decide.
enum class ChartFlag : unsigned {
    none = 0,
    circular_orbit = 1u << 0,     // e ~ 0: pericentre direction (hence g) undefined
    orbit_plane_through_centre = 1u << 1,  // |Theta| ~ G: node x' x C undefined
    vertical_total_momentum = 1u << 2,     // C_t ~ parallel to k: n0, z undefined
    centre_along_total_momentum = 1u << 3, // C_t ~ parallel to x': n1, gamma undefined
    elliptic_boundary = 1u << 4,  // lambda ~ 1 or |mu| ~ 1
};

constexpr ChartFlag operator|(ChartFlag a, ChartFlag b) {
    return static_cast<ChartFlag>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr ChartFlag& operator|=(ChartFlag& a, ChartFlag b) { return a = a | b; }
constexpr bool has_flag(ChartFlag set, ChartFlag f) {
    return (static_cast<unsigned>(set) & static_cast<unsigned>(f)) != 0;
}
constexpr bool degenerate(ChartFlag set) { return set != ChartFlag::none; }

/// Mass parameters.  m is the reduced mass of the attracted body, eps the
/// secondary/primary mass ratio.  mu and rho = mu/eps only matter for the
/// three-body (Sun-Earth-Asteroid) model.
struct MassParams {
    double m = 1.0;
    double eps = 0.0;
    double mu = 0.0;

    double rho() const {
        if (eps <= 0.0) throw DomainError("MassParams::rho: eps must be positive");
        return mu / eps;
    }
};

/// Impulse-position coordinates.  (y, x) is the attracted body; xprime the
/// second centre.  yprime is zero for the plain two-centre problem and the
/// planet impulse in the three-body model, where (yprime, xprime) form a
/// second canonical pair.
struct CartesianState {
    Vec3 y;
    Vec3 x;
    Vec3 xprime;
    Vec3 yprime{};
};

} // namespace euler2c
