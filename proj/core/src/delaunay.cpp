#include "euler2c/delaunay.hpp"

#include <cmath>

#include "euler2c/first_integrals.hpp"
#include "euler2c/kepler.hpp"

namespace euler2c {

namespace {

constexpr double kCircularTol = 1e-12;
constexpr double kNodeTol = 1e-10;

double clamp_unit(double v) { return std::max(-1.0, std::min(1.0, v)); }

} // namespace

double oriented_angle(const Vec3& w, const Vec3& u, const Vec3& v) {
    const double s = dot(cross(u, v), w) / norm(w);
    const double c = dot(u, v);
    return wrap_angle(std::atan2(s, c));
}

DelaunayElements cartesian_to_delaunay(const CartesianState& s, double m) {
    DelaunayElements d;

    const double r = norm(s.x);
    if (r == 0.0) throw DomainError("cartesian_to_delaunay: x = 0");
    d.rprime = norm(s.xprime);
    if (d.rprime == 0.0) throw DomainError("cartesian_to_delaunay: x' = 0");
    const Vec3 xhat_p = s.xprime / d.rprime;

    const double energy_k = norm2(s.y) / (2.0 * m) - 1.0 / r;
    if (energy_k >= 0.0) throw DomainError("cartesian_to_delaunay: hyperbolic input");
    const double a = -1.0 / (2.0 * energy_k);
    d.Lambda = std::sqrt(m * a);

    const Vec3 c = angular_momentum(s);
    d.G = norm(c);
    if (d.G == 0.0) throw DomainError("cartesian_to_delaunay: rectilinear orbit (C = 0)");
    const Vec3 chat = c / d.G;

    const Vec3 c_tot = cross(s.xprime, s.yprime) + c;
    d.Gtot = norm(c_tot);
    d.Z = c_tot.z;
    d.Theta = dot(c, xhat_p);
    d.Rprime = dot(s.yprime, s.xprime) / d.rprime;

    // node chain with gauge fallbacks
    const Vec3 khat{0, 0, 1};
    Vec3 n0 = cross(khat, c_tot);
    Vec3 chat_t = d.Gtot > 0.0 ? c_tot / d.Gtot : khat;
    if (norm(n0) < kNodeTol * std::max(1.0, d.Gtot)) {
        d.flags |= ChartFlag::vertical_total_momentum;
        d.z = 0.0;
        n0 = Vec3{1, 0, 0};
    } else {
        n0 = unit(n0);
        d.z = oriented_angle(khat, Vec3{1, 0, 0}, n0);
    }

    Vec3 n1 = cross(c_tot, s.xprime);
    if (norm(n1) < kNodeTol * std::max(1.0, d.Gtot * d.rprime)) {
        d.flags |= ChartFlag::centre_along_total_momentum;
        d.gamma = 0.0;
        n1 = n0;
    } else {
        n1 = unit(n1);
        d.gamma = oriented_angle(chat_t, n0, n1);
    }

    Vec3 n = cross(s.xprime, c);
    if (norm(n) < kNodeTol * std::max(1.0, d.G * d.rprime)) {
        d.flags |= ChartFlag::orbit_plane_through_centre;
        d.vartheta = 0.0;
        n = n1;
    } else {
        n = unit(n);
        d.vartheta = oriented_angle(xhat_p, n1, n);
    }

    // pericentre block
    const Vec3 l = eccentricity_vector(s, m);
    const double e = norm(l) / m;
    double zeta;
    if (e < kCircularTol) {
        d.flags |= ChartFlag::circular_orbit;
        d.g = 0.0;
        const Vec3 p_gauge = cross(n, chat);
        zeta = oriented_angle(chat, p_gauge, s.x);
    } else {
        const Vec3 phat = l / (m * e);
        d.g = oriented_angle(chat, n, cross(chat, phat));
        const double esinz = dot(s.x, s.y) / d.Lambda;
        const double ecosz = 1.0 - r / a;
        zeta = wrap_angle(std::atan2(esinz, ecosz));
    }
    d.ell = mean_from_eccentric(e, zeta);
    return d;
}

CartesianState delaunay_to_cartesian(const DelaunayElements& d, double m) {
    if (!(d.Lambda > 0.0) || !(d.G > 0.0) || d.G > d.Lambda * (1.0 + 1e-12))
        throw DomainError("delaunay_to_cartesian: need 0 < G <= Lambda");
    if (!(d.rprime > 0.0)) throw DomainError("delaunay_to_cartesian: need r' > 0");
    const double gtot = d.Gtot;
    if (std::abs(d.Theta) > d.G * (1.0 + 1e-12) || std::abs(d.Theta) > gtot * (1.0 + 1e-12))
        throw DomainError("delaunay_to_cartesian: need |Theta| <= min(G, Gtot)");

    // total-momentum frame
    const Vec3 khat{0, 0, 1};
    const Vec3 n0{std::cos(d.z), std::sin(d.z), 0.0};
    const double cos_incl = clamp_unit(gtot > 0.0 ? d.Z / gtot : 1.0);
    const double sin_incl = std::sqrt(std::max(0.0, 1.0 - cos_incl * cos_incl));
    const Vec3 chat_t = cos_incl * khat + sin_incl * cross(n0, khat);

    // second centre
    const Vec3 n1 = rotate_about(chat_t, d.gamma, n0);
    const double cos_beta = clamp_unit(gtot > 0.0 ? d.Theta / gtot : 0.0);
    const double sin_beta = std::sqrt(std::max(0.0, 1.0 - cos_beta * cos_beta));
    const Vec3 xhat_p = cos_beta * chat_t + sin_beta * cross(n1, chat_t);
    const Vec3 xprime = d.rprime * xhat_p;

    // orbit normal
    const Vec3 n = rotate_about(xhat_p, d.vartheta, n1);
    const double cos_i2 = clamp_unit(d.Theta / d.G);
    const double sin_i2 = std::sqrt(std::max(0.0, 1.0 - cos_i2 * cos_i2));
    const Vec3 chat = cos_i2 * xhat_p + sin_i2 * cross(n, xhat_p);

    // in-plane frame and Kepler position
    const Vec3 w = rotate_about(chat, d.g, n);
    const Vec3 phat = cross(w, chat);
    const Vec3 qhat = cross(chat, phat);

    const double a = d.Lambda * d.Lambda / m;
    const double e = d.eccentricity();
    const double zeta = solve_kepler(e, d.ell);
    const double cz = std::cos(zeta), sz = std::sin(zeta);
    const double se = std::sqrt(std::max(0.0, 1.0 - e * e));
    const double mean_motion = m / (d.Lambda * d.Lambda * d.Lambda);
    const double rho = 1.0 - e * cz;

    CartesianState s;
    s.x = a * (cz - e) * phat + a * se * sz * qhat;
    s.y = m * (a * mean_motion / rho) * (-sz * phat + se * cz * qhat);
    s.xprime = xprime;
    const Vec3 c_prime = gtot * chat_t - d.G * chat;
    s.yprime = d.Rprime * xhat_p + cross(c_prime, xprime) / (d.rprime * d.rprime);
    return s;
}

double euler_g0_from_elements(double rprime, double Lambda, double Theta, double G, double g,
                              double m) {
    if (G <= 0.0) throw DomainError("euler_g0_from_elements: G = 0 is singular");
    const double f1 = std::sqrt(std::max(0.0, 1.0 - Theta * Theta / (G * G)));
    const double f2 = std::sqrt(std::max(0.0, 1.0 - G * G / (Lambda * Lambda)));
    return G * G + m * rprime * f1 * f2 * std::cos(g);
}

double euler_g0_from_elements(const DelaunayElements& d, double m) {
    return euler_g0_from_elements(d.rprime, d.Lambda, d.Theta, d.G, d.g, m);
}

} // namespace euler2c
