#pragma once

#include <optional>
#include <string>
#include <vector>

#include "euler2c/types.hpp"

namespace euler2c {

/// Planar (Theta = 0) normalized portrait of the leading Euler integral:
/// level(u, g) = u^2 + delta sqrt(1 - u^2) cos g with u = G/Lambda,
/// delta = r'/a.
struct PortraitSpec {
    double delta = 0.0;
    double level = 0.0;
    double Lambda = 1.0;
};

/// Normalized value at (g, u = G/Lambda).
double portrait_value(double delta, double g, double u);

struct Equilibrium {
    double g = 0.0;
    double G_over_Lambda = 0.0;
    bool stable = false;
    double level = 0.0;
};

/// Equilibria of the planar portrait.  For 0 < delta < 2: saddle at (0, 0)
/// on level delta, minimum at (pi, 0) on level -delta, maximum at
/// (0, sqrt(1 - delta^2/4)) on level 1 + delta^2/4.  For delta > 2 both axis
/// points are stable and the interior maximum is gone.  delta = 2 throws
/// (degenerate transition).
std::vector<Equilibrium> equilibria(double delta);

enum class MotionClass { libration, rotation, separatrix, forbidden_below, boundary_level };

std::string to_string(MotionClass c);

/// Exact classification on the studied window 0 < delta < 1, level <= 1.
/// Levels are compared with absolute tolerance 1e-12.
MotionClass classify_motion(const PortraitSpec& spec);

struct LevelPoint {
    double g = 0.0;
    double G_over_Lambda = 0.0;
};

struct LevelCurve {
    std::vector<LevelPoint> points; // upper branch, G >= 0; mirror for G < 0
    MotionClass kind = MotionClass::rotation;
    std::string label;
};

/// Points of the level set via the positive root w+ of
/// w^2 - delta w cos g - 1 + level = 0, on the admissible arc
/// cos g < level/delta.  An empty admissible set returns an empty polyline
/// with kind = forbidden_below.  level = 1 returns the first of the two
/// split components; see split_level_curves.
LevelCurve level_curve(const PortraitSpec& spec, int n_points);

/// The two components of the level = 1 set: {G = Lambda} and the branch
/// w = delta cos g on cos g > 0.
std::pair<LevelCurve, LevelCurve> split_level_curves(double delta, int n_points);

/// Homoclinic solution on the separatrix level (level = delta):
/// G(t) = sigma Lambda / cosh(sigma Lambda (t - t0)), with
/// sigma^2 = delta (2 - delta), beta^2 = 2 - delta, and the stated arccos
/// expression for g.  The sign of g is an explicit branch choice.
struct HomoclinicPoint {
    double G = 0.0;
    double g = 0.0;
};
HomoclinicPoint homoclinic(double delta, double Lambda, double t, double t0,
                           int branch = +1);

/// Action (1/2pi) contour integral of G dg over the level set: the full
/// circle for rotation, twice the libration arc for libration.  Throws on
/// the separatrix and outside the studied window.
double action_integral(const PortraitSpec& spec, double rel_tol = 1e-11);

} // namespace euler2c
