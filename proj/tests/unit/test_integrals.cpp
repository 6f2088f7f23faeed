#include "doctest.h"

#include <random>

#include "euler2c/first_integrals.hpp"
#include "euler2c/integrate.hpp"
#include "euler2c/numdiff.hpp"
#include "generators.hpp"

using namespace euler2c;
using namespace euler2c::testing;

TEST_CASE("angular momentum basics") {
    CartesianState s{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}};
    const Vec3 c = angular_momentum(s);
    CHECK(c.x == 0.0);
    CHECK(c.y == 0.0);
    CHECK(c.z == 1.0);
    s.y = 3.0 * s.x;
    CHECK(norm(angular_momentum(s)) == 0.0);
}

TEST_CASE("angular momentum is conserved on a Kepler orbit") {
    IntegrateOptions opt;
    opt.tol = 1e-11;
    const CartesianState s0{{0.0, 1.1, 0.2}, {1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}};
    const Trajectory traj = integrate(s0, TwoCentreParams{1.0, 0.0}, 0.0, 40.0, opt);
    const Vec3 c0 = angular_momentum(s0);
    for (const auto& sample : traj.samples) {
        const Vec3 c = angular_momentum(sample.state);
        CHECK(std::abs(c.x - c0.x) < 1e-9);
        CHECK(std::abs(c.y - c0.y) < 1e-9);
        CHECK(std::abs(c.z - c0.z) < 1e-9);
    }
}

TEST_CASE("eccentricity vector values") {
    const CartesianState circ{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}};
    CHECK(norm(eccentricity_vector(circ, 1.0)) < 1e-15);

    const CartesianState ecc{{0.0, 1.2, 0.0}, {1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}};
    const Vec3 l = eccentricity_vector(ecc, 1.0);
    CHECK(l.x == doctest::Approx(0.44).epsilon(1e-14));
    CHECK(std::abs(l.y) < 1e-15);
    CHECK(std::abs(l.z) < 1e-15);
}

TEST_CASE("bound states have e < 1") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        const CartesianState s = random_bound_state(rng);
        CHECK(norm(eccentricity_vector(s, 1.0)) < 1.0);
    }
}

TEST_CASE("leading Euler integral values") {
    const CartesianState circ{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}};
    CHECK(euler_integral_g0(circ, 1.0) == doctest::Approx(1.0).epsilon(1e-14));

    const CartesianState ecc{{0.0, 1.2, 0.0}, {1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}};
    CHECK(euler_integral_g0(ecc, 1.0) == doctest::Approx(0.56).epsilon(1e-13));

    CartesianState merged = ecc;
    merged.xprime = {0, 0, 0};
    CHECK(euler_integral_g0(merged, 1.0) == doctest::Approx(norm2(angular_momentum(merged))));
}

TEST_CASE("Euler integral reduces to its leading part at eps = 0") {
    std::mt19937_64 rng(17);
    const CartesianState s = random_bound_state(rng);
    CHECK(euler_integral(s, 1.0, 0.0) == euler_integral_g0(s, 1.0));
}

TEST_CASE("Euler integral is conserved along a two-centre run") {
    IntegrateOptions opt;
    opt.tol = 1e-10;
    const CartesianState s0{{0.0, 1.05, 0.0}, {1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}};
    const TwoCentreParams p{1.0, 0.1};
    const Trajectory traj = integrate(s0, p, 0.0, 100.0, opt);
    CHECK(conservation_report(traj, p).at("G") < 1e-6);
}

TEST_CASE("Euler integral commutes with the Hamiltonian at random states") {
    std::mt19937_64 rng(23);
    const double eps = 0.1;
    const ScalarField h = [eps](const CartesianState& s) {
        return two_centre_hamiltonian(s, {1.0, eps}, 1e-12);
    };
    const ScalarField g = [eps](const CartesianState& s) { return euler_integral(s, 1.0, eps); };
    for (int k = 0; k < 100; ++k) {
        CHECK(std::abs(poisson_bracket_richardson(h, g, random_bound_state(rng))) < 1e-6);
    }
}

TEST_CASE("bracket refinement sharpens at second order") {
    std::mt19937_64 rng(29);
    const ScalarField h = [](const CartesianState& s) {
        return two_centre_hamiltonian(s, {1.0, 0.1}, 1e-12);
    };
    const ScalarField g = [](const CartesianState& s) { return euler_integral(s, 1.0, 0.1); };
    int total = 0;
    for (int k = 0; k < 20; ++k) {
        const CartesianState s = random_bound_state(rng);
        const double coarse = std::abs(poisson_bracket(h, g, s, 2e-4));
        const double fine = std::abs(poisson_bracket(h, g, s, 1e-4));
        if (coarse < 1e-9) continue; // roundoff floor
        ++total;
        CHECK(coarse / fine >= 3.9); // halving the step quarters the residual
    }
    CHECK(total >= 10);
}

TEST_CASE("symmetric Euler integral limits and conservation") {
    std::mt19937_64 rng(31);
    const CartesianState s = random_bound_state(rng);
    CHECK(euler_integral_symmetric(s.y, s.x, {0, 0, 0}, 0.5, 0.5) ==
          doctest::Approx(norm2(cross(s.x, s.y))).epsilon(1e-14));

    // conservation along a symmetric-form trajectory
    const SymmetricParams p{{0.6, 0.0, 0.0}, 0.7, 0.2};
    const CartesianState s0{{0.1, 0.9, 0.05}, {1.3, 0.0, 0.2}, {0, 0, 0}};
    IntegrateOptions opt;
    opt.tol = 1e-10;
    const Trajectory traj = integrate(s0, p, 0.0, 60.0, opt);
    const double g0 = euler_integral_symmetric(s0.y, s0.x, p.x0, p.m_plus, p.m_minus);
    for (const auto& sample : traj.samples) {
        const double g = euler_integral_symmetric(sample.state.y, sample.state.x, p.x0,
                                                  p.m_plus, p.m_minus);
        CHECK(rel_err(g, g0) < 1e-6);
    }
}

TEST_CASE("asymmetric and symmetric Euler integrals agree through the recentring maps") {
    // m^2 Gsim(y/m, x - x'/2; x'/2, 1/m, eps/m) = G0 + eps G1 + m |x'|^2 h / 2
    std::mt19937_64 rng(37);
    for (int k = 0; k < 100; ++k) {
        const CartesianState s = random_bound_state(rng);
        const double m = 1.2, eps = 0.25;
        const double lhs =
            m * m *
            euler_integral_symmetric(s.y / m, s.x - s.xprime / 2.0, s.xprime / 2.0, 1.0 / m,
                                     eps / m);
        const double h = two_centre_hamiltonian(s, {m, eps}, 1e-12);
        const double rhs =
            euler_integral(s, m, eps) + m * norm2(s.xprime) / 2.0 * h;
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("commuting set: values, bounds and node flags") {
    std::mt19937_64 rng(41);
    const MassParams masses{1.0, 0.1};

    // planar state with C parallel to k and x' in the plane: Theta = 0
    const CartesianState planar{{0.0, 1.1, 0.0}, {1.0, 0.0, 0.0}, {2.0, 0.5, 0.0}};
    const IntegralSet planar_set = commuting_integrals(planar, masses);
    CHECK(std::abs(planar_set.Theta) < 1e-15);

    for (int k = 0; k < 100; ++k) {
        const IntegralSet set =
            commuting_integrals(random_bound_state(rng, {.with_yprime = true}), masses);
        CHECK(set.Gtot >= std::abs(set.Z));
        CHECK(std::abs(set.Theta) <= set.G_norm * (1 + 1e-14));
        CHECK(set.G == set.G0 + masses.eps * set.G1);
    }

    // |Theta| = |C| exactly when C is parallel to x'
    CartesianState aligned{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.5}};
    const IntegralSet aligned_set = commuting_integrals(aligned, masses);
    CHECK(std::abs(std::abs(aligned_set.Theta) - aligned_set.G_norm) < 1e-14);
    CHECK(has_flag(aligned_set.flags, ChartFlag::orbit_plane_through_centre));
}

TEST_CASE("the four commuting integrals pairwise Poisson-commute") {
    std::mt19937_64 rng(43);
    const MassParams masses{1.0, 0.1};
    const ScalarField fields[4] = {
        [&](const CartesianState& s) { return commuting_integrals(s, masses).Z; },
        [&](const CartesianState& s) { return commuting_integrals(s, masses).Gtot; },
        [&](const CartesianState& s) { return commuting_integrals(s, masses).Theta; },
        [&](const CartesianState& s) { return commuting_integrals(s, masses).rprime; },
    };
    for (int k = 0; k < 10; ++k) {
        const CartesianState s = random_bound_state(rng, {.with_yprime = true});
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                CHECK(std::abs(poisson_bracket_richardson(fields[i], fields[j], s)) < 1e-6);
    }
}

TEST_CASE("conservation report across models") {
    IntegrateOptions opt;
    opt.tol = 1e-11;

    // Kepler: every component of C conserved
    const CartesianState kepler{{0.0, 1.0, 0.1}, {1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}};
    const TwoCentreParams kp{1.0, 0.0};
    const DriftReport kd = conservation_report(integrate(kepler, kp, 0.0, 30.0, opt), kp);
    CHECK(kd.at("C_x") < 1e-9);
    CHECK(kd.at("C_y") < 1e-9);
    CHECK(kd.at("C_z") < 1e-9);

    // three-body: total angular momentum conserved
    const SeaParams sea{0.05, 0.005};
    CartesianState s;
    s.xprime = {1.0, 0.0, 0.0};
    s.yprime = {0.0, std::sqrt(sea.m_planet()) / sea.rho(), 0.1};
    s.x = {0.0, 0.5, 0.05};
    s.y = {-std::sqrt(sea.m_asteroid() / 0.5), 0.0, 0.0};
    const DriftReport sd = conservation_report(integrate(s, sea, 0.0, 50.0, opt), sea);
    CHECK(sd.at("Z") < 1e-8);
    CHECK(sd.at("Gtot") < 1e-8);

    CHECK_THROWS_AS(conservation_report(Trajectory{}, kp), DomainError);
}
