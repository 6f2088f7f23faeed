#include "doctest.h"

#include <numbers>
#include <random>

#include "euler2c/delaunay.hpp"
#include "euler2c/elliptic.hpp"
#include "euler2c/first_integrals.hpp"
#include "euler2c/integrate.hpp"
#include "euler2c/kepler.hpp"
#include "euler2c/numdiff.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace euler2c;
using namespace euler2c::testing;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("Kepler equation: closed-form cases") {
    CHECK(solve_kepler(0.0, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(solve_kepler(0.5, kPi) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK_THROWS_AS(solve_kepler(1.0, 0.5), DomainError);
    CHECK_THROWS_AS(solve_kepler(-0.1, 0.5), DomainError);
}

TEST_CASE("Kepler equation agrees with the bisection oracle") {
    const double z = solve_kepler(0.5, 1.0);
    CHECK(z == doctest::Approx(kepler_bisection_oracle(0.5, 1.0)).epsilon(1e-11));
    CHECK(z == doctest::Approx(1.49870113351785).epsilon(1e-11));
}

TEST_CASE("Kepler residual stays below 1e-13 on an (e, ell) grid") {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double e = 0.99 * i / 99.0;
        for (int j = 0; j < 100; ++j) {
            const double ell = 2.0 * kPi * j / 100.0;
            const double z = solve_kepler(e, ell);
            worst = std::max(worst, std::abs(z - e * std::sin(z) - ell));
        }
    }
    CHECK(worst < 1e-13);
}

TEST_CASE("Kepler solution keeps the branch of the mean anomaly") {
    const double ell = 7.0 * kPi + 0.3;
    const double z = solve_kepler(0.6, ell);
    CHECK(std::abs(z - ell) < 1.0);
    CHECK(std::abs(z - 0.6 * std::sin(z) - ell) < 1e-12);
}

TEST_CASE("element extraction on reference states") {
    // circular planar state: degenerate pericentre
    const CartesianState circ{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}};
    const DelaunayElements dc = cartesian_to_delaunay(circ, 1.0);
    CHECK(dc.Lambda == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(dc.G == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(has_flag(dc.flags, ChartFlag::circular_orbit));

    // eccentric state: Lambda = 1/sqrt(0.56), G = 1.2, e = 0.44
    const CartesianState ecc{{0.0, 1.2, 0.0}, {1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}};
    const DelaunayElements de = cartesian_to_delaunay(ecc, 1.0);
    CHECK(de.Lambda == doctest::Approx(1.0 / std::sqrt(0.56)).epsilon(1e-13));
    CHECK(de.G == doctest::Approx(1.2).epsilon(1e-13));
    CHECK(de.eccentricity() == doctest::Approx(0.44).epsilon(1e-12));
    // Keplerian energy in elements
    CHECK(-1.0 / (2.0 * de.Lambda * de.Lambda) ==
          doctest::Approx(norm2(ecc.y) / 2.0 - 1.0 / norm(ecc.x)).epsilon(1e-13));

    // hyperbolic input rejected
    const CartesianState hyp{{0.0, 1.6, 0.0}, {1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}};
    CHECK_THROWS_AS(cartesian_to_delaunay(hyp, 1.0), DomainError);
}

TEST_CASE("chart roundtrip on random bound states") {
    std::mt19937_64 rng(57);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const CartesianState s = random_bound_state(rng, {.with_yprime = (k % 2 == 0)});
        const DelaunayElements d = cartesian_to_delaunay(s, 1.0);
        if (degenerate(d.flags)) continue;
        const CartesianState back = delaunay_to_cartesian(d, 1.0);
        worst = std::max(worst, max_component_diff(back, s));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("element roundtrip through state space") {
    std::mt19937_64 rng(61);
    for (int k = 0; k < 200; ++k) {
        const DelaunayElements d = random_elements(rng);
        const DelaunayElements d2 = cartesian_to_delaunay(delaunay_to_cartesian(d, 1.0), 1.0);
        CHECK(std::abs(d2.Lambda - d.Lambda) < 1e-10);
        CHECK(std::abs(d2.G - d.G) < 1e-10);
        CHECK(std::abs(d2.Theta - d.Theta) < 1e-10);
        CHECK(std::abs(d2.ell - d.ell) < 1e-9);
        CHECK(std::abs(d2.g - d.g) < 1e-9);
        CHECK(std::abs(d2.vartheta - d.vartheta) < 1e-9);
        CHECK(std::abs(d2.rprime - d.rprime) < 1e-10);
        CHECK(std::abs(d2.Rprime - d.Rprime) < 1e-10);
    }
}

TEST_CASE("planar states roundtrip through the gauge convention") {
    // C_t parallel to k: the (Z, z) node is undefined, the gauge still inverts
    const CartesianState s{{0.0, 1.1, 0.0}, {1.0, 0.0, 0.0}, {2.0, 0.5, 0.0}};
    const DelaunayElements d = cartesian_to_delaunay(s, 1.0);
    CHECK(has_flag(d.flags, ChartFlag::vertical_total_momentum));
    CHECK(max_component_diff(delaunay_to_cartesian(d, 1.0), s) < 1e-10);
}

TEST_CASE("pure two-centre states have vartheta = pi") {
    // with y' = 0 the nodes n1 and n are antiparallel by construction
    std::mt19937_64 rng(67);
    for (int k = 0; k < 20; ++k) {
        const DelaunayElements d = random_elements(rng);
        CHECK(d.vartheta == doctest::Approx(kPi).epsilon(1e-12));
    }
}

TEST_CASE("leading Euler integral in elements") {
    SUBCASE("circular orbit: G0 = G^2") {
        DelaunayElements d;
        d.Lambda = 1.3;
        d.G = 1.3;
        d.rprime = 2.0;
        d.g = 0.7;
        CHECK(euler_g0_from_elements(d, 1.0) == doctest::Approx(d.G * d.G).epsilon(1e-14));
    }
    SUBCASE("g = pi/2 kills the mixed term") {
        DelaunayElements d;
        d.Lambda = 1.5;
        d.G = 0.9;
        d.rprime = 2.0;
        d.g = kPi / 2.0;
        d.Theta = 0.3;
        CHECK(euler_g0_from_elements(d, 1.0) == doctest::Approx(d.G * d.G).epsilon(1e-14));
    }
    SUBCASE("chart expression matches the vector formula on random states") {
        std::mt19937_64 rng(71);
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const CartesianState s = random_bound_state(rng);
            const DelaunayElements d = cartesian_to_delaunay(s, 1.0);
            if (degenerate(d.flags)) continue;
            worst = std::max(worst,
                             std::abs(euler_g0_from_elements(d, 1.0) - euler_integral_g0(s, 1.0)));
        }
        CHECK(worst < 1e-9);
    }
    SUBCASE("G = 0 is singular") {
        CHECK_THROWS_AS(euler_g0_from_elements(2.0, 1.0, 0.0, 0.0, 0.1, 1.0), DomainError);
    }
}

TEST_CASE("the chart composition is canonical") {
    std::mt19937_64 rng(73);
    const double m = 1.0;
    auto elements_field = [m](double DelaunayElements::*member) {
        return ScalarField([member, m](const CartesianState& s) {
            return cartesian_to_delaunay(s, m).*member;
        });
    };
    const ScalarField L = elements_field(&DelaunayElements::Lambda);
    const ScalarField G = elements_field(&DelaunayElements::G);
    // trig of angles avoids branch cuts under the stencil
    const ScalarField sin_ell = [m](const CartesianState& s) {
        return std::sin(cartesian_to_delaunay(s, m).ell);
    };
    const ScalarField sin_g = [m](const CartesianState& s) {
        return std::sin(cartesian_to_delaunay(s, m).g);
    };

    int tested = 0;
    while (tested < 10) {
        const CartesianState s = random_bound_state(rng);
        const DelaunayElements d = cartesian_to_delaunay(s, m);
        if (degenerate(d.flags)) continue;
        ++tested;
        // angle-action pairs: {sin ell, Lambda} = cos(ell) {ell, Lambda} = cos(ell),
        // matching the {x, y} = delta orientation of the coordinate bracket
        CHECK(std::abs(poisson_bracket_richardson(sin_ell, L, s) - std::cos(d.ell)) < 1e-6);
        CHECK(std::abs(poisson_bracket_richardson(sin_g, G, s) - std::cos(d.g)) < 1e-6);
        CHECK(std::abs(poisson_bracket_richardson(L, sin_g, s)) < 1e-6);
        CHECK(std::abs(poisson_bracket_richardson(G, sin_ell, s)) < 1e-6);
        CHECK(std::abs(poisson_bracket_richardson(L, G, s)) < 1e-6);
    }
}

// ---- reduced chart and elliptic coordinates ----

namespace {

PChartState random_pchart(std::mt19937_64& rng, bool planar) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (;;) {
        const CartesianState s = random_bound_state(rng, {.planar = planar});
        Vec3 x0 = planar ? Vec3{0.4 + 0.4 * uni(rng), 0.3 * uni(rng), 0.0}
                         : Vec3{0.4 + 0.4 * uni(rng), 0.3 * uni(rng), 0.2 * uni(rng)};
        if (norm(s.x - x0) < 0.25 || norm(s.x + x0) < 0.25) continue;
        const PChartState p = pchart_from_cartesian(s.y, s.x, x0);
        const EllipticState e = elliptic_from_pchart(p);
        if (e.lambda - 1.0 < 1e-3 || 1.0 - std::abs(e.mu) < 1e-3) continue;
        if (std::abs(std::sin(p.phi)) < 1e-3) continue;
        return p;
    }
}

} // namespace

TEST_CASE("equidistant point sits on the mu = 0 hyperbola") {
    const Vec3 x0{0.7, 0.0, 0.0};
    const Vec3 x{0.0, 1.1, 0.0}; // same distance to both centres
    const Vec3 y{0.4, 0.3, 0.0};
    const EllipticState e = elliptic_from_pchart(pchart_from_cartesian(y, x, x0));
    CHECK(std::abs(e.mu) < 1e-14);
}

TEST_CASE("elliptic chart roundtrip on interior states") {
    std::mt19937_64 rng(79);
    double worst = 0.0;
    for (int k = 0; k < 300; ++k) {
        const PChartState p = random_pchart(rng, k % 2 == 0);
        const EllipticState e = elliptic_from_pchart(p);
        REQUIRE(!degenerate(e.flags));
        const PChartState back = pchart_from_elliptic(e);
        worst = std::max({worst, std::abs(back.R - p.R), std::abs(back.Phi - p.Phi),
                          std::abs(back.r - p.r), std::abs(back.phi - p.phi)});
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("boundary points are flagged") {
    PChartState p;
    p.r0 = 1.0;
    p.Theta = 0.0;
    p.Phi = 0.5;
    p.R = 0.1;
    p.r = 2.0;
    p.phi = 0.0; // on the focal axis: |mu| = 1
    const EllipticState e = elliptic_from_pchart(p);
    CHECK(has_flag(e.flags, ChartFlag::elliptic_boundary));
    CHECK_THROWS_AS(pchart_from_elliptic(e), DomainError);
}

TEST_CASE("Hamiltonian agrees across Cartesian, reduced and elliptic charts") {
    std::mt19937_64 rng(83);
    const double m_plus = 0.7, m_minus = 0.4;
    double worst_pchart = 0.0, worst_elliptic = 0.0;
    for (int k = 0; k < 200; ++k) {
        const CartesianState s = random_bound_state(rng, {.planar = k % 2 == 0});
        const Vec3 x0 = k % 2 == 0 ? Vec3{0.6, 0.2, 0.0} : Vec3{0.6, 0.2, 0.3};
        if (norm(s.x - x0) < 0.25 || norm(s.x + x0) < 0.25) continue;
        CartesianState sym = s;
        sym.xprime = x0;
        const double h_cart =
            symmetric_hamiltonian(sym, SymmetricParams{x0, m_plus, m_minus}, 1e-12);
        const PChartState p = pchart_from_cartesian(s.y, s.x, x0);
        worst_pchart = std::max(worst_pchart,
                                std::abs(pchart_hamiltonian(p, m_plus, m_minus) - h_cart));
        const EllipticState e = elliptic_from_pchart(p);
        if (degenerate(e.flags)) continue;
        worst_elliptic = std::max(
            worst_elliptic, std::abs(elliptic_hamiltonian(e, m_plus, m_minus) - h_cart));
    }
    CHECK(worst_pchart < 1e-10);
    CHECK(worst_elliptic < 1e-10);
}

TEST_CASE("elliptic Hamiltonian symmetry and potential-only cases") {
    EllipticState e;
    e.lambda = 1.4;
    e.mu = 0.3;
    e.r0 = 1.0;
    e.Theta = 0.0;
    e.p_lambda = 0.2;
    e.p_mu = -0.5;
    SUBCASE("even in mu for equal masses") {
        EllipticState mirrored = e;
        mirrored.mu = -e.mu;
        mirrored.p_mu = -e.p_mu;
        CHECK(elliptic_hamiltonian(e, 0.5, 0.5) ==
              doctest::Approx(elliptic_hamiltonian(mirrored, 0.5, 0.5)).epsilon(1e-14));
    }
    SUBCASE("momenta and Theta zero leaves the potential term") {
        e.p_lambda = e.p_mu = 0.0;
        const double expected = -((0.7 + 0.4) * e.lambda - (0.7 - 0.4) * e.mu) /
                                (e.r0 * (e.lambda * e.lambda - e.mu * e.mu));
        CHECK(elliptic_hamiltonian(e, 0.7, 0.4) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("reconstructed Phi matches the input through the momenta") {
    std::mt19937_64 rng(89);
    for (int k = 0; k < 100; ++k) {
        const PChartState p = random_pchart(rng, false);
        const PChartState back = pchart_from_elliptic(elliptic_from_pchart(p));
        CHECK(std::abs(back.Phi - p.Phi) < 1e-10);
    }
}

TEST_CASE("separation constants along a symmetric trajectory") {
    const SymmetricParams p{{0.6, 0.0, 0.0}, 0.7, 0.2};
    const CartesianState s0{{0.1, 0.9, 0.03}, {1.3, 0.0, 0.15}, {0, 0, 0}};
    IntegrateOptions opt;
    opt.tol = 1e-11;
    const Trajectory traj = integrate(s0, p, 0.0, 40.0, opt);

    int used = 0;
    for (const auto& sample : traj.samples) {
        const PChartState pc = pchart_from_cartesian(sample.state.y, sample.state.x, p.x0);
        const EllipticState es = elliptic_from_pchart(pc);
        if (es.lambda - 1.0 < 1e-3 || 1.0 - std::abs(es.mu) < 1e-3) continue;
        ++used;
        const double E = symmetric_hamiltonian(sample.state, p, 1e-12);
        const HjSplit split = hamilton_jacobi_split(es, E, p.m_plus, p.m_minus);
        const double gsym = euler_integral_symmetric(sample.state.y, sample.state.x, p.x0,
                                                     p.m_plus, p.m_minus);
        CHECK(std::abs(split.F_mu - split.F_lambda) < 1e-8);
        CHECK(std::abs(split.F_mu - gsym) < 1e-8);
    }
    CHECK(used > 50);
}

TEST_CASE("separation constants vanish in the fully symmetric rest case") {
    EllipticState e;
    e.lambda = 1.5;
    e.mu = 0.0;
    e.p_lambda = 0.3;
    e.p_mu = 0.0;
    e.Theta = 0.0;
    e.r0 = 1.0;
    const HjSplit split = hamilton_jacobi_split(e, 0.0, 0.5, 0.5);
    CHECK(split.F_mu == 0.0);
}

TEST_CASE("orbit normal along the centre direction is flagged") {
    // C parallel to x': the node x' x C vanishes, |Theta| = G
    const CartesianState s{{0.0, 1.05, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.7}};
    const DelaunayElements d = cartesian_to_delaunay(s, 1.0);
    CHECK(has_flag(d.flags, ChartFlag::orbit_plane_through_centre));
    CHECK(std::abs(std::abs(d.Theta) - d.G) < 1e-14);
    // the gauge representative still reconstructs the same geometry
    const CartesianState back = delaunay_to_cartesian(d, 1.0);
    CHECK(std::abs(norm(back.x) - norm(s.x)) < 1e-12);
    CHECK(std::abs(dot(angular_momentum(back), unit(back.xprime)) - d.Theta) < 1e-12);
}
