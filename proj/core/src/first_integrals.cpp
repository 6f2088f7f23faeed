#include "euler2c/first_integrals.hpp"

#include <cmath>

namespace euler2c {

namespace {
constexpr double kCircularTol = 1e-12;
constexpr double kNodeTol = 1e-12;
} // namespace

Vec3 angular_momentum(const CartesianState& s) { return cross(s.x, s.y); }

Vec3 eccentricity_vector(const CartesianState& s, double m) {
    const double r = norm(s.x);
    if (r == 0.0) throw DomainError("eccentricity_vector: x = 0");
    const Vec3 c = angular_momentum(s);
    return cross(s.y, c) - m * s.x / r;
}

double euler_integral_g0(const CartesianState& s, double m) {
    const Vec3 c = angular_momentum(s);
    const Vec3 l = eccentricity_vector(s, m);
    if (norm(l) / m < kCircularTol) return norm2(c);
    return norm2(c) - dot(s.xprime, l);
}

double euler_integral_g1(const CartesianState& s, double m) {
    const Vec3 d = s.xprime - s.x;
    const double dist = norm(d);
    if (dist == 0.0) throw DomainError("euler_integral_g1: x = x'");
    return m * dot(d, s.xprime) / dist;
}

double euler_integral(const CartesianState& s, double m, double eps) {
    return euler_integral_g0(s, m) + eps * euler_integral_g1(s, m);
}

double euler_integral_symmetric(const Vec3& y, const Vec3& x, const Vec3& x0, double m_plus,
                                double m_minus) {
    const double rp = norm(x + x0);
    const double rm = norm(x - x0);
    if (rp == 0.0 || rm == 0.0) throw DomainError("euler_integral_symmetric: collision");
    return norm2(cross(x, y)) + dot(x0, y) * dot(x0, y) +
           2.0 * dot(x, x0) * (m_plus / rp - m_minus / rm);
}

IntegralSet commuting_integrals(const CartesianState& s, const MassParams& p) {
    const double rprime = norm(s.xprime);
    if (rprime == 0.0) throw DomainError("commuting_integrals: x' = 0");

    const Vec3 c = angular_momentum(s);
    const Vec3 c_tot = cross(s.xprime, s.yprime) + c;
    const Vec3 xhat = s.xprime / rprime;

    IntegralSet set;
    set.Z = c_tot.z;
    set.Gtot = norm(c_tot);
    set.Theta = dot(c, xhat);
    set.rprime = rprime;
    set.G_norm = norm(c);
    set.G0 = euler_integral_g0(s, p.m);
    set.G1 = euler_integral_g1(s, p.m);
    set.G = set.G0 + p.eps * set.G1;
    set.energy = norm2(s.y) / (2.0 * p.m) - 1.0 / norm(s.x) - p.eps / norm(s.xprime - s.x);

    const Vec3 n0 = cross(Vec3{0, 0, 1}, c_tot);
    const Vec3 n1 = cross(c_tot, s.xprime);
    const Vec3 n = cross(s.xprime, c);
    if (set.Gtot < kNodeTol || norm(n0) < kNodeTol * std::max(1.0, set.Gtot))
        set.flags |= ChartFlag::vertical_total_momentum;
    if (norm(n1) < kNodeTol * std::max(1.0, set.Gtot * rprime))
        set.flags |= ChartFlag::centre_along_total_momentum;
    if (norm(n) < kNodeTol * std::max(1.0, set.G_norm * rprime))
        set.flags |= ChartFlag::orbit_plane_through_centre;
    return set;
}

DriftReport conservation_report(const Trajectory& traj, const ModelSpec& model) {
    if (traj.samples.empty()) throw DomainError("conservation_report: empty trajectory");

    const MassParams masses = std::visit(
        [](const auto& p) -> MassParams {
            using P = std::decay_t<decltype(p)>;
            MassParams mp;
            if constexpr (std::is_same_v<P, TwoCentreParams>) {
                mp.m = p.m;
                mp.eps = p.eps;
            } else if constexpr (std::is_same_v<P, SeaParams>) {
                mp.m = p.m_asteroid();
                mp.eps = p.eps;
                mp.mu = p.mu;
            }
            return mp;
        },
        model);

    auto values = [&](const TrajectorySample& sample) {
        std::map<std::string, double> v;
        v["energy"] = sample.energy;
        v["G"] = sample.euler_g;
        const Vec3 c = angular_momentum(sample.state);
        v["C_x"] = c.x;
        v["C_y"] = c.y;
        v["C_z"] = c.z;
        if (!std::holds_alternative<SymmetricParams>(model)) {
            const IntegralSet set = commuting_integrals(sample.state, masses);
            v["Z"] = set.Z;
            v["Gtot"] = set.Gtot;
            v["Theta"] = set.Theta;
            v["rprime"] = set.rprime;
        }
        return v;
    };

    const auto first = values(traj.samples.front());
    DriftReport report;
    for (const auto& [name, v0] : first) report[name] = 0.0;
    for (const auto& sample : traj.samples) {
        const auto v = values(sample);
        for (const auto& [name, value] : v) {
            const double drift =
                std::abs(value - first.at(name)) / std::max(1.0, std::abs(first.at(name)));
            report[name] = std::max(report[name], drift);
        }
    }
    return report;
}

} // namespace euler2c
