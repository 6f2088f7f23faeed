#include "euler2c/secular.hpp"

#include <cmath>

#include "euler2c/delaunay.hpp"
#include "euler2c/integrate.hpp"
#include "euler2c/kepler.hpp"

namespace euler2c {

namespace {

constexpr double kSeparatrixGuard = 1e-6;

void check_point(const SecularPoint& pt) {
    if (!(pt.Lambda > 0.0) || !(pt.rprime >= 0.0))
        throw DomainError("averaged_potential: need Lambda > 0 and r' >= 0");
    if (pt.G0 < pt.Theta * pt.Theta || pt.G0 > pt.Lambda * pt.Lambda)
        throw DomainError("averaged_potential: G0 outside [Theta^2, Lambda^2]");
}

/// d/dG0 of the averaged potential, central differences with step
/// 1e-5 Lambda^2, one-sided near the admissible boundary.
double d_avg_dG0(const SecularPoint& pt, double a) {
    const double h = 1e-5 * pt.Lambda * pt.Lambda;
    const double lo = pt.Theta * pt.Theta, hi = pt.Lambda * pt.Lambda;
    auto eval = [&](double g0) {
        SecularPoint q = pt;
        q.G0 = g0;
        return averaged_potential(q, a);
    };
    if (pt.G0 + h <= hi && pt.G0 - h >= lo)
        return (eval(pt.G0 + h) - eval(pt.G0 - h)) / (2.0 * h);
    if (pt.G0 + h > hi) // backward second-order stencil
        return (3.0 * eval(pt.G0) - 4.0 * eval(pt.G0 - h) + eval(pt.G0 - 2.0 * h)) / (2.0 * h);
    return (-3.0 * eval(pt.G0) + 4.0 * eval(pt.G0 + h) - eval(pt.G0 + 2.0 * h)) / (2.0 * h);
}

struct ChartPartials {
    double dr = 0.0, dLambda = 0.0, dTheta = 0.0, dG = 0.0, dg = 0.0;
};

/// Analytic partial derivatives of
/// G0 = G^2 + m r' sqrt(1 - Theta^2/G^2) sqrt(1 - G^2/Lambda^2) cos g.
ChartPartials g0_partials(double rprime, double Lambda, double Theta, double G, double g,
                          double m) {
    const double X = std::sqrt(std::max(0.0, 1.0 - Theta * Theta / (G * G)));
    const double Y = std::sqrt(std::max(0.0, 1.0 - G * G / (Lambda * Lambda)));
    const double cg = std::cos(g);
    ChartPartials p;
    p.dr = m * X * Y * cg;
    p.dg = -m * rprime * X * Y * std::sin(g);
    p.dLambda = (Y > 0.0) ? m * rprime * X * cg * (G * G / (Lambda * Lambda * Lambda)) / Y : 0.0;
    p.dTheta = (X > 0.0) ? -m * rprime * Y * cg * (Theta / (G * G)) / X : 0.0;
    double dXdG = (X > 0.0) ? (Theta * Theta / (G * G * G)) / X : 0.0;
    double dYdG = (Y > 0.0) ? -(G / (Lambda * Lambda)) / Y : 0.0;
    p.dG = 2.0 * G + m * rprime * cg * (dXdG * Y + X * dYdG);
    return p;
}

} // namespace

QuadratureResult averaged_potential_quad(const SecularPoint& pt, double a, int n0,
                                         double rel_tol, double guard) {
    check_point(pt);
    const double E = pt.ecc_factor();
    const double I = pt.incl_factor();
    const double rp = pt.rprime;

    auto dist2 = [&](double z) {
        const double rho = 1.0 - E * std::cos(z);
        return rp * rp - 2.0 * a * rp * I * std::sin(z) + a * a * rho * rho;
    };
    // collision-set proximity scan before committing to the quadrature
    for (int k = 0; k < 512; ++k) {
        const double z = 2.0 * std::numbers::pi * k / 512;
        if (dist2(z) < guard * guard)
            throw DomainError("averaged_potential: orbit passes within guard of the centre");
    }

    auto res = periodic_mean([&](double z) { return (1.0 - E * std::cos(z)) / std::sqrt(dist2(z)); },
                             rel_tol, n0);
    res.value = -res.value;
    return res;
}

double averaged_potential(const SecularPoint& pt, double a, int n0) {
    return averaged_potential_quad(pt, a, n0).value;
}

double averaged_potential_series(const SecularPoint& pt, double a) {
    check_point(pt);
    if (pt.G0 <= 0.0) throw DomainError("averaged_potential_series: G0 -> 0 blows up");
    const double L3 = pt.Lambda * pt.Lambda * pt.Lambda;
    const double corr = pt.rprime * pt.rprime / (4.0 * a * a) * L3 *
                        (3.0 * pt.Theta * pt.Theta - pt.G0) / std::pow(pt.G0, 2.5);
    return -(1.0 / a) * (1.0 - corr);
}

std::vector<SecularFixedPoint> secular_fixed_points(double rprime, double Lambda, double Theta,
                                                    double a, int grid) {
    if (Theta == 0.0) throw DomainError("secular_fixed_points: Theta = 0 excluded");
    const double h = 1e-5 * Lambda * Lambda;
    const double lo = Theta * Theta + 2.5 * h;
    const double hi = Lambda * Lambda - 2.5 * h;
    if (!(hi > lo)) throw DomainError("secular_fixed_points: empty admissible interval");

    auto f = [&](double g0) {
        return d_avg_dG0(SecularPoint{rprime, Lambda, Theta, g0}, a);
    };

    std::vector<SecularFixedPoint> roots;
    double prev_x = lo, prev_f = f(lo);
    for (int i = 1; i <= grid; ++i) {
        const double x = lo + (hi - lo) * i / grid;
        const double fx = f(x);
        if (prev_f == 0.0 || (prev_f < 0.0) != (fx < 0.0)) {
            double a0 = prev_x, b0 = x, fa = prev_f;
            for (int it = 0; it < 80 && (b0 - a0) > 1e-14 * Lambda * Lambda; ++it) {
                const double mid = 0.5 * (a0 + b0);
                const double fm = f(mid);
                if ((fm < 0.0) == (fa < 0.0)) {
                    a0 = mid;
                    fa = fm;
                } else {
                    b0 = mid;
                }
            }
            const double root = 0.5 * (a0 + b0);
            roots.push_back({root, std::sqrt(root), std::abs(f(root))});
        }
        prev_x = x;
        prev_f = fx;
    }
    return roots;
}

SecularState first_order_secular_flow(const SecularState& s0, double m, double eps, double rho,
                                      double t) {
    if (std::abs(s0.Theta) > 1e-12)
        throw DomainError("first_order_secular_flow: planar backend needs Theta = 0");
    if (!(s0.G > 0.0 && s0.G <= s0.Lambda * (1.0 + 1e-12)))
        throw DomainError("first_order_secular_flow: need 0 < G <= Lambda");

    const double a = s0.Lambda * s0.Lambda / m;
    const double G0 = euler_g0_from_elements(s0.rprime, s0.Lambda, s0.Theta, s0.G, s0.g, m);
    const double delta = s0.rprime / a;
    const double level = G0 / (s0.Lambda * s0.Lambda);
    if (std::abs(level - delta) < kSeparatrixGuard)
        throw DomainError("first_order_secular_flow: initial data on the separatrix level");

    const SecularPoint pt{s0.rprime, s0.Lambda, s0.Theta, G0};
    const double UG0 = d_avg_dG0(pt, a);

    // remaining frozen partials of the averaged potential
    auto eval_at = [&](double rprime, double Lambda) {
        const double aa = Lambda * Lambda / m;
        return averaged_potential(SecularPoint{rprime, Lambda, s0.Theta, G0}, aa);
    };
    const double hr = 1e-5 * std::max(1.0, s0.rprime);
    const double Ur = (eval_at(s0.rprime + hr, s0.Lambda) - eval_at(s0.rprime - hr, s0.Lambda)) /
                      (2.0 * hr);
    const double hL = 1e-5 * s0.Lambda;
    const double UL = (eval_at(s0.rprime, s0.Lambda + hL) - eval_at(s0.rprime, s0.Lambda - hL)) /
                      (2.0 * hL);
    // dU/dTheta vanishes on the planar set (even dependence); kept for clarity
    const double UTheta = 0.0;

    const ChartPartials dG0 =
        g0_partials(s0.rprime, s0.Lambda, s0.Theta, s0.G, s0.g, m);

    SecularState s1 = s0;

    // (G, g): level flow of G0 run for the rescaled time rho eps UG0 t
    const double tau = rho * eps * UG0 * t;
    if (tau != 0.0) {
        using Solver = Dopri5<2>;
        Solver::Options opt;
        opt.rtol = 1e-12;
        opt.atol = 1e-12;
        Solver solver(
            [&](double, const Solver::State& y) -> Solver::State {
                const ChartPartials p =
                    g0_partials(s0.rprime, s0.Lambda, s0.Theta, y[0], y[1], m);
                return {-p.dg, p.dG};
            },
            opt);
        Solver::State yf{};
        solver.run(0.0, {s0.G, s0.g}, tau, [](const Solver::StepRecord&) {}, yf);
        s1.G = yf[0];
        s1.g = wrap_angle(yf[1]);
    }

    const double h0_prime = 1.0 / (s0.rprime * s0.rprime);
    s1.Rprime = s0.Rprime - (h0_prime + rho * eps * (Ur + UG0 * dG0.dr)) * t;
    s1.ell = wrap_angle(s0.ell +
                        rho * (m / (s0.Lambda * s0.Lambda * s0.Lambda)) * t +
                        rho * eps * (UL + UG0 * dG0.dLambda) * t);
    s1.vartheta = wrap_angle(s0.vartheta + rho * eps * (UTheta + UG0 * dG0.dTheta) * t);
    return s1;
}

} // namespace euler2c
