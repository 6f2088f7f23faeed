#include "euler2c/hamiltonians.hpp"

#include <cmath>

namespace euler2c {

namespace {

double checked_distance(const Vec3& d, double guard, const char* what) {
    const double r = norm(d);
    if (r < guard) throw DomainError(std::string("collision guard: ") + what);
    return r;
}

Vec3 inverse_cube(const Vec3& d) {
    const double r = norm(d);
    return d / (r * r * r);
}

} // namespace

double two_centre_hamiltonian(const CartesianState& s, const TwoCentreParams& p, double guard) {
    const double r = checked_distance(s.x, guard, "|x|");
    const double rp = checked_distance(s.xprime - s.x, guard, "|x'-x|");
    return norm2(s.y) / (2.0 * p.m) - 1.0 / r - p.eps / rp;
}

double symmetric_hamiltonian(const CartesianState& s, const SymmetricParams& p, double guard) {
    const double rp = checked_distance(s.x + p.x0, guard, "|x+x0|");
    const double rm = checked_distance(s.x - p.x0, guard, "|x-x0|");
    return norm2(s.y) / 2.0 - p.m_plus / rp - p.m_minus / rm;
}

SeaSplit sea_hamiltonian(const CartesianState& s, const SeaParams& p, double guard) {
    const double rho = p.rho();
    const double r_planet = checked_distance(s.xprime, guard, "|x'|");
    const double r_ast = checked_distance(s.x, guard, "|x|");
    const double r_mutual = checked_distance(s.xprime - s.x, guard, "|x'-x|");
    SeaSplit split;
    split.h0 = -1.0 / r_planet;
    split.rho_h1 =
        rho * (norm2(s.y) / (2.0 * p.m_asteroid()) - 1.0 / r_ast - p.eps / r_mutual);
    split.rho2_f = rho * rho * (norm2(s.yprime) / (2.0 * p.m_planet()) + p.eps * dot(s.yprime, s.y));
    return split;
}

double sea_hamiltonian_direct(const CartesianState& s, const SeaParams& p, double guard) {
    const double mu = p.mu, eps = p.eps;
    const Vec3 yp = mu * s.yprime;
    const Vec3 y = mu * s.y;
    const double r_planet = checked_distance(s.xprime, guard, "|x'|");
    const double r_ast = checked_distance(s.x, guard, "|x|");
    const double r_mutual = checked_distance(s.xprime - s.x, guard, "|x'-x|");
    const double H = norm2(yp) / (2.0 * eps * p.m_planet()) - eps / r_planet +
                     norm2(y) / (2.0 * mu * p.m_asteroid()) - mu / r_ast -
                     mu * eps / r_mutual + dot(yp, y);
    return H / eps;
}

double hamiltonian(const CartesianState& s, const ModelSpec& model, double guard) {
    return std::visit(
        [&](const auto& p) -> double {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, TwoCentreParams>)
                return two_centre_hamiltonian(s, p, guard);
            else if constexpr (std::is_same_v<P, SymmetricParams>)
                return symmetric_hamiltonian(s, p, guard);
            else
                return sea_hamiltonian(s, p, guard).total();
        },
        model);
}

CartesianState equations_of_motion(const CartesianState& s, const ModelSpec& model) {
    CartesianState d; // all zero
    std::visit(
        [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, TwoCentreParams>) {
                d.x = s.y / p.m;
                d.y = -inverse_cube(s.x) + p.eps * inverse_cube(s.xprime - s.x);
            } else if constexpr (std::is_same_v<P, SymmetricParams>) {
                d.x = s.y;
                d.y = -p.m_plus * inverse_cube(s.x + p.x0) - p.m_minus * inverse_cube(s.x - p.x0);
            } else {
                const double rho = p.rho();
                const Vec3 mutual = inverse_cube(s.xprime - s.x);
                d.x = rho * s.y / p.m_asteroid() + rho * rho * p.eps * s.yprime;
                d.y = -rho * inverse_cube(s.x) + rho * p.eps * mutual;
                d.xprime = rho * rho * s.yprime / p.m_planet() + rho * rho * p.eps * s.y;
                d.yprime = -inverse_cube(s.xprime) - rho * p.eps * mutual;
            }
        },
        model);
    return d;
}

double min_separation(const CartesianState& s, const ModelSpec& model) {
    return std::visit(
        [&](const auto& p) -> double {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, TwoCentreParams>)
                return std::min(norm(s.x), norm(s.x - s.xprime));
            else if constexpr (std::is_same_v<P, SymmetricParams>)
                return std::min(norm(s.x + p.x0), norm(s.x - p.x0));
            else
                return std::min({norm(s.x), norm(s.xprime), norm(s.x - s.xprime)});
        },
        model);
}

CentreDistances centre_distances(const CartesianState& s, const ModelSpec& model) {
    return std::visit(
        [&](const auto& p) -> CentreDistances {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, SymmetricParams>)
                return {norm(s.x + p.x0), norm(s.x - p.x0)};
            else
                return {norm(s.x), norm(s.x - s.xprime)};
        },
        model);
}

} // namespace euler2c
