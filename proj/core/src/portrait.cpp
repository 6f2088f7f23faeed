#include "euler2c/portrait.hpp"

#include <cmath>
#include <numbers>

#include "euler2c/kepler.hpp"
#include "euler2c/quadrature.hpp"

namespace euler2c {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLevelTol = 1e-12;

double w_plus(double delta, double level, double g) {
    const double dc = delta * std::cos(g);
    return 0.5 * (dc + std::sqrt(std::max(0.0, dc * dc + 4.0 - 4.0 * level)));
}

double u_from_w(double w) { return std::sqrt(std::max(0.0, 1.0 - w * w)); }

void check_window(const PortraitSpec& spec) {
    if (!(spec.delta > 0.0 && spec.delta < 1.0))
        throw DomainError("portrait: studied window needs 0 < delta < 1");
    if (spec.level > 1.0 + kLevelTol)
        throw DomainError("portrait: levels above 1 are outside the studied window");
}

} // namespace

double portrait_value(double delta, double g, double u) {
    return u * u + delta * std::sqrt(std::max(0.0, 1.0 - u * u)) * std::cos(g);
}

std::vector<Equilibrium> equilibria(double delta) {
    if (!(delta > 0.0)) throw DomainError("equilibria: delta must be positive");
    if (std::abs(delta - 2.0) < kLevelTol)
        throw DomainError("equilibria: degenerate transition at delta = 2");
    std::vector<Equilibrium> eq;
    const bool below = delta < 2.0;
    eq.push_back({0.0, 0.0, !below, delta});
    eq.push_back({kPi, 0.0, true, -delta});
    if (below) {
        const double u = std::sqrt(1.0 - delta * delta / 4.0);
        eq.push_back({0.0, u, true, 1.0 + delta * delta / 4.0});
    }
    return eq;
}

std::string to_string(MotionClass c) {
    switch (c) {
        case MotionClass::libration: return "libration";
        case MotionClass::rotation: return "rotation";
        case MotionClass::separatrix: return "separatrix";
        case MotionClass::forbidden_below: return "forbidden_below";
        case MotionClass::boundary_level: return "boundary_level";
    }
    return "?";
}

MotionClass classify_motion(const PortraitSpec& spec) {
    check_window(spec);
    const double c = spec.level, d = spec.delta;
    if (std::abs(c - 1.0) <= kLevelTol) return MotionClass::boundary_level;
    if (std::abs(c - d) <= kLevelTol) return MotionClass::separatrix;
    if (c < -d - kLevelTol) return MotionClass::forbidden_below;
    if (c > d) return MotionClass::rotation;
    return MotionClass::libration;
}

LevelCurve level_curve(const PortraitSpec& spec, int n_points) {
    if (n_points < 2) throw DomainError("level_curve: need at least two points");
    LevelCurve curve;
    curve.kind = classify_motion(spec);
    curve.label = "level=" + std::to_string(spec.level);

    switch (curve.kind) {
        case MotionClass::forbidden_below:
            curve.label += " (below the minimum -delta: empty)";
            return curve;
        case MotionClass::boundary_level:
            return split_level_curves(spec.delta, n_points).first;
        case MotionClass::rotation: {
            for (int i = 0; i < n_points; ++i) {
                const double g = 2.0 * kPi * i / (n_points - 1);
                curve.points.push_back({g, u_from_w(w_plus(spec.delta, spec.level, g))});
            }
            return curve;
        }
        case MotionClass::libration:
        case MotionClass::separatrix: {
            // admissible arc cos g <= level/delta
            const double gs = std::acos(std::max(-1.0, std::min(1.0, spec.level / spec.delta)));
            for (int i = 0; i < n_points; ++i) {
                const double g = gs + (2.0 * kPi - 2.0 * gs) * i / (n_points - 1);
                curve.points.push_back({g, u_from_w(w_plus(spec.delta, spec.level, g))});
            }
            return curve;
        }
    }
    return curve;
}

std::pair<LevelCurve, LevelCurve> split_level_curves(double delta, int n_points) {
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("split_level_curves: studied window needs 0 < delta < 1");
    LevelCurve circle, lobe;
    circle.kind = lobe.kind = MotionClass::boundary_level;
    circle.label = "level=1 (G = Lambda)";
    lobe.label = "level=1 (w = delta cos g branch)";
    for (int i = 0; i < n_points; ++i) {
        const double g = 2.0 * kPi * i / (n_points - 1);
        circle.points.push_back({g, 1.0});
    }
    for (int i = 0; i < n_points; ++i) {
        const double g = -kPi / 2 + kPi * i / (n_points - 1);
        const double w = delta * std::cos(g);
        lobe.points.push_back({wrap_angle(g), u_from_w(w)});
    }
    return {circle, lobe};
}

HomoclinicPoint homoclinic(double delta, double Lambda, double t, double t0, int branch) {
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("homoclinic: need 0 < delta < 1");
    const double sigma2 = delta * (2.0 - delta);
    const double sigma = std::sqrt(sigma2);
    const double beta2 = 2.0 - delta;
    const double ch = std::cosh(sigma * Lambda * (t - t0));
    HomoclinicPoint p;
    p.G = sigma * Lambda / ch;
    const double num = 1.0 - beta2 / (ch * ch);
    const double den = std::sqrt(1.0 - sigma2 / (ch * ch));
    const double ratio = std::max(-1.0, std::min(1.0, num / den));
    const double g = std::acos(ratio);
    p.g = branch >= 0 ? g : wrap_angle(-g);
    return p;
}

double action_integral(const PortraitSpec& spec, double rel_tol) {
    const MotionClass kind = classify_motion(spec);
    if (kind == MotionClass::separatrix)
        throw DomainError("action_integral: separatrix level excluded (divergent period)");
    if (kind != MotionClass::rotation && kind != MotionClass::libration)
        throw DomainError("action_integral: level must be librational or rotational");

    if (kind == MotionClass::rotation) {
        const auto q = periodic_mean(
            [&](double g) { return u_from_w(w_plus(spec.delta, spec.level, g)); }, rel_tol);
        return spec.Lambda * q.value;
    }

    // libration: loop around (pi, 0) parametrized by g = pi - (pi - g*) cos(psi);
    // the signed branch G(psi) sin(psi) is smooth, so the periodic rule stays
    // spectral despite the sqrt turning points.
    const double gs = std::acos(std::max(-1.0, std::min(1.0, spec.level / spec.delta)));
    const double half_span = kPi - gs;
    const auto q = periodic_mean(
        [&](double psi) {
            const double g = kPi - half_span * std::cos(psi);
            const double u = u_from_w(w_plus(spec.delta, spec.level, g));
            const double signed_u = std::sin(psi) >= 0.0 ? u : -u;
            return spec.Lambda * signed_u * half_span * std::sin(psi);
        },
        rel_tol);
    return q.value;
}

} // namespace euler2c
