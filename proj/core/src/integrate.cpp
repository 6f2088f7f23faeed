#include "euler2c/integrate.hpp"

#include <cmath>

#include "euler2c/first_integrals.hpp"

namespace euler2c {

namespace {

using State12 = std::array<double, 12>;

State12 pack(const CartesianState& s) {
    return {s.y.x, s.y.y, s.y.z, s.x.x, s.x.y, s.x.z,
            s.yprime.x, s.yprime.y, s.yprime.z, s.xprime.x, s.xprime.y, s.xprime.z};
}

CartesianState unpack(const State12& a) {
    CartesianState s;
    s.y = {a[0], a[1], a[2]};
    s.x = {a[3], a[4], a[5]};
    s.yprime = {a[6], a[7], a[8]};
    s.xprime = {a[9], a[10], a[11]};
    return s;
}

double trajectory_euler_integral(const CartesianState& s, const ModelSpec& model) {
    return std::visit(
        [&](const auto& p) -> double {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, TwoCentreParams>)
                return euler_integral(s, p.m, p.eps);
            else if constexpr (std::is_same_v<P, SymmetricParams>)
                return euler_integral_symmetric(s.y, s.x, p.x0, p.m_plus, p.m_minus);
            else
                // osculating two-centre integral of the asteroid pair
                return euler_integral(s, p.m_asteroid(), p.eps);
        },
        model);
}

} // namespace

Trajectory integrate(const CartesianState& s0, const ModelSpec& model, double t0, double t1,
                     const IntegrateOptions& opt) {
    if (!(opt.tol >= 1e-13 && opt.tol <= 1e-3))
        throw DomainError("integrate: tol must lie in [1e-13, 1e-3]");
    if (min_separation(s0, model) < opt.guard_radius)
        throw DomainError("integrate: initial state inside the guard radius");

    Trajectory traj;
    traj.stats.tol = opt.tol;

    auto record = [&](double t, const CartesianState& s) {
        TrajectorySample sample;
        sample.t = t;
        sample.state = s;
        sample.energy = hamiltonian(s, model, opt.guard_radius / 2.0);
        sample.euler_g = trajectory_euler_integral(s, model);
        const CentreDistances d = centre_distances(s, model);
        sample.dist_c1 = d.c1;
        sample.dist_c2 = d.c2;
        traj.samples.push_back(sample);
    };

    typename Dopri5<12>::Options dopt;
    // the controller runs a safety factor below the requested tolerance so
    // that the accumulated drift over desk-scale spans stays within tol * t
    dopt.rtol = std::max(opt.tol / 5.0, 2e-14);
    dopt.atol = dopt.rtol;
    dopt.max_steps = opt.max_steps;
    dopt.event = [&](double, const State12& y) {
        return min_separation(unpack(y), model) - opt.guard_radius;
    };

    Dopri5<12> solver(
        [&](double, const State12& y) { return pack(equations_of_motion(unpack(y), model)); },
        dopt);

    record(t0, s0);
    const double dir = (t1 >= t0) ? 1.0 : -1.0;
    double next_sample = t0 + dir * opt.sample_dt;

    State12 y_final{};
    auto on_step = [&](const Dopri5<12>::StepRecord& rec) {
        if (opt.sample_dt > 0.0) {
            while (dir * (rec.t1 - next_sample) >= 0.0 && dir * (t1 - next_sample) > 0.0) {
                record(next_sample, unpack(Dopri5<12>::interpolate(rec, next_sample)));
                next_sample += dir * opt.sample_dt;
            }
        } else {
            record(rec.t1, unpack(rec.y1));
        }
    };

    const auto stats = solver.run(t0, pack(s0), t1, on_step, y_final);
    traj.stats.accepted = stats.accepted;
    traj.stats.rejected = stats.rejected;
    traj.stats.collision_event = stats.event_hit;
    traj.stats.t_end = stats.t_end;

    // with a fixed sampling stride, make sure the end point is present
    if (opt.sample_dt > 0.0 && (traj.samples.empty() || traj.samples.back().t != stats.t_end))
        record(stats.t_end, unpack(y_final));

    return traj;
}

} // namespace euler2c
