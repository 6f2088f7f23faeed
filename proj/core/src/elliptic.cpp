#include "euler2c/elliptic.hpp"

#include <cmath>

#include "euler2c/delaunay.hpp"
#include "euler2c/kepler.hpp"

namespace euler2c {

namespace {

constexpr double kBoundaryTol = 1e-12;

struct Radii {
    double rp, rm;
};

Radii focal_radii(const PChartState& p) {
    const double c = std::sqrt(std::max(0.0, 1.0 - p.Theta * p.Theta / (p.Phi * p.Phi)));
    const double cosphi = std::cos(p.phi);
    // x0.x = -r0 r c cos(phi), so r+- = |x -+(-x0)| come out of the cosine rule
    const double rp2 = p.r0 * p.r0 - 2.0 * p.r0 * p.r * c * cosphi + p.r * p.r;
    const double rm2 = p.r0 * p.r0 + 2.0 * p.r0 * p.r * c * cosphi + p.r * p.r;
    if (rp2 <= 0.0 || rm2 <= 0.0) throw DomainError("elliptic chart: collision with a centre");
    return {std::sqrt(rp2), std::sqrt(rm2)};
}

} // namespace

PChartState pchart_from_cartesian(const Vec3& y, const Vec3& x, const Vec3& x0) {
    PChartState p;
    p.r = norm(x);
    p.r0 = norm(x0);
    if (p.r == 0.0 || p.r0 == 0.0) throw DomainError("pchart_from_cartesian: zero radius");
    const Vec3 c = cross(x, y);
    p.Phi = norm(c);
    if (p.Phi == 0.0) throw DomainError("pchart_from_cartesian: C = 0");
    p.R = dot(y, x) / p.r;
    p.Theta = dot(c, x0) / p.r0;
    const Vec3 n = cross(x0, c);
    if (norm(n) < 1e-14 * p.Phi * p.r0)
        throw DomainError("pchart_from_cartesian: C parallel to x0, node undefined");
    p.phi = oriented_angle(c, n, cross(c, x));
    return p;
}

EllipticState elliptic_from_pchart(const PChartState& p) {
    EllipticState e;
    e.Theta = p.Theta;
    e.r0 = p.r0;
    const Radii rr = focal_radii(p);
    e.lambda = (rr.rp + rr.rm) / (2.0 * p.r0);
    e.mu = (rr.rp - rr.rm) / (2.0 * p.r0);

    const double l2 = e.lambda * e.lambda, m2 = e.mu * e.mu;
    if (e.lambda - 1.0 < kBoundaryTol || 1.0 - std::abs(e.mu) < kBoundaryTol) {
        e.flags |= ChartFlag::elliptic_boundary;
        e.p_lambda = 0.0;
        e.p_mu = 0.0;
        return e;
    }

    const double q = (1.0 - m2) * (l2 - 1.0) * p.Phi * p.Phi -
                     (l2 + m2 - 1.0) * p.Theta * p.Theta;
    const double root = std::sqrt(std::max(0.0, q));
    const double den = l2 + m2 - 1.0;
    const double sigma = std::sin(p.phi) >= 0.0 ? 1.0 : -1.0;
    e.p_lambda = p.r0 * e.lambda * p.R / std::sqrt(den) -
                 sigma * e.mu * root / (den * (l2 - 1.0));
    e.p_mu = p.r0 * e.mu * p.R / std::sqrt(den) +
             sigma * e.lambda * root / (den * (1.0 - m2));
    return e;
}

PChartState pchart_from_elliptic(const EllipticState& e) {
    const double l2 = e.lambda * e.lambda, m2 = e.mu * e.mu;
    if (e.lambda - 1.0 < kBoundaryTol || 1.0 - std::abs(e.mu) < kBoundaryTol)
        throw DomainError("pchart_from_elliptic: chart boundary");

    PChartState p;
    p.Theta = e.Theta;
    p.r0 = e.r0;
    p.r = e.r0 * std::sqrt(l2 + m2 - 1.0);

    const double den = l2 + m2 - 1.0;
    p.R = (e.lambda * (l2 - 1.0) * e.p_lambda + e.mu * (1.0 - m2) * e.p_mu) /
          (e.r0 * (l2 - m2) * std::sqrt(den));
    const double combo = e.lambda * e.p_mu - e.mu * e.p_lambda;
    const double phi2 = combo * combo * (l2 - 1.0) * (1.0 - m2) / ((l2 - m2) * (l2 - m2)) +
                        den / ((1.0 - m2) * (l2 - 1.0)) * e.Theta * e.Theta;
    p.Phi = std::sqrt(phi2);

    const double c = std::sqrt(std::max(0.0, 1.0 - e.Theta * e.Theta / phi2));
    const double cosphi =
        std::max(-1.0, std::min(1.0, -e.lambda * e.mu / (std::sqrt(den) * c)));
    const double principal = std::acos(cosphi);
    p.phi = combo >= 0.0 ? principal : wrap_angle(-principal);
    return p;
}

double pchart_hamiltonian(const PChartState& p, double m_plus, double m_minus) {
    const Radii rr = focal_radii(p);
    return p.R * p.R / 2.0 + p.Phi * p.Phi / (2.0 * p.r * p.r) - m_plus / rr.rp -
           m_minus / rr.rm;
}

double elliptic_hamiltonian(const EllipticState& e, double m_plus, double m_minus) {
    const double l2 = e.lambda * e.lambda, m2 = e.mu * e.mu;
    if (e.lambda - 1.0 < kBoundaryTol || 1.0 - std::abs(e.mu) < kBoundaryTol)
        throw DomainError("elliptic_hamiltonian: chart boundary");
    const double r02 = e.r0 * e.r0;
    const double sep = l2 - m2;
    return (e.p_lambda * e.p_lambda * (l2 - 1.0) + e.p_mu * e.p_mu * (1.0 - m2)) /
               (2.0 * r02 * sep) +
           e.Theta * e.Theta / (2.0 * r02 * sep) * (1.0 / (1.0 - m2) + 1.0 / (l2 - 1.0)) -
           ((m_plus + m_minus) * e.lambda - (m_plus - m_minus) * e.mu) / (e.r0 * sep);
}

HjSplit hamilton_jacobi_split(const EllipticState& e, double E, double m_plus, double m_minus) {
    const double l2 = e.lambda * e.lambda, m2 = e.mu * e.mu;
    const double r02 = e.r0 * e.r0;
    HjSplit s;
    s.F_mu = e.p_mu * e.p_mu * (1.0 - m2) + e.Theta * e.Theta / (1.0 - m2) +
             2.0 * e.r0 * (m_plus - m_minus) * e.mu + 2.0 * r02 * m2 * E;
    s.F_lambda = -e.p_lambda * e.p_lambda * (l2 - 1.0) - e.Theta * e.Theta / (l2 - 1.0) +
                 2.0 * e.r0 * (m_plus + m_minus) * e.lambda + 2.0 * r02 * l2 * E;
    return s;
}

} // namespace euler2c
