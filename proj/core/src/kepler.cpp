#include "euler2c/kepler.hpp"

#include <cmath>
#include <numbers>

#include "euler2c/types.hpp"

namespace euler2c {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_angle(double a) {
    double w = std::fmod(a, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    // fmod can land exactly on 2*pi after the correction
    if (w >= kTwoPi) w -= kTwoPi;
    return w;
}

double solve_kepler(double e, double ell) {
    if (!(e >= 0.0 && e < 1.0)) throw DomainError("solve_kepler: need 0 <= e < 1");
    const double ell_r = wrap_angle(ell);
    const double offset = ell - ell_r;

    // zeta - e sin(zeta) is monotone, so the root is bracketed by ell +- e
    double lo = ell_r - e, hi = ell_r + e;
    double zeta = ell_r + e * std::sin(ell_r);

    for (int it = 0; it < 100; ++it) {
        const double f = zeta - e * std::sin(zeta) - ell_r;
        if (std::abs(f) < 5e-15) break;
        if (f > 0.0)
            hi = std::min(hi, zeta);
        else
            lo = std::max(lo, zeta);
        const double fp = 1.0 - e * std::cos(zeta);
        double next;
        if (fp < 1e-3) {
            next = 0.5 * (lo + hi); // bisection where Newton is ill-conditioned
        } else {
            next = zeta - f / fp;
            if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
        }
        if (next == zeta) break;
        zeta = next;
    }
    return zeta + offset;
}

double true_from_eccentric(double e, double zeta) {
    return wrap_angle(std::atan2(std::sqrt(1.0 - e * e) * std::sin(zeta), std::cos(zeta) - e));
}

double eccentric_from_true(double e, double nu) {
    return wrap_angle(std::atan2(std::sqrt(1.0 - e * e) * std::sin(nu), e + std::cos(nu)));
}

double mean_from_eccentric(double e, double zeta) {
    return wrap_angle(zeta - e * std::sin(zeta));
}

} // namespace euler2c
