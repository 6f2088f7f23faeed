#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "euler2c/hamiltonians.hpp"
#include "euler2c/types.hpp"

namespace euler2c {

/// Generic adaptive Dormand-Prince 5(4) driver on a fixed-size state.
/// Dense output uses the standard quartic interpolant of the pair.
template <int N>
class Dopri5 {
  public:
    using State = std::array<double, N>;
    using Deriv = std::function<State(double, const State&)>;

    struct StepRecord {
        double t0 = 0.0, t1 = 0.0;
        double span = 0.0; // full step length the dense coefficients were fitted on
        State y0{}, y1{};
        std::array<State, 5> rcont{}; // dense-output coefficients
    };

    struct Options {
        double rtol = 1e-10;
        double atol = 1e-10;
        double h_init = 0.0; // 0 = automatic
        long max_steps = 50'000'000;
        // event(t, y) <= 0 stops the integration; the crossing is refined on
        // the dense interpolant.
        std::function<double(double, const State&)> event;
    };

    struct Stats {
        long accepted = 0;
        long rejected = 0;
        bool event_hit = false;
        double t_end = 0.0;
    };

    Dopri5(Deriv f, Options opt) : f_(std::move(f)), opt_(std::move(opt)) {}

    /// Integrates from (t0, y0) to t1 (t1 < t0 integrates backward), invoking
    /// on_step for every accepted step.  Returns final state and statistics.
    Stats run(double t0, const State& y0, double t1,
              const std::function<void(const StepRecord&)>& on_step, State& y_final);

    static State interpolate(const StepRecord& rec, double t);

  private:
    Deriv f_;
    Options opt_;
};

namespace dopri5_detail {
// Dormand-Prince 5(4) tableau.
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                        a75 = -2187.0 / 6784, a76 = 11.0 / 84;
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
inline constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                        d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                        d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;
} // namespace dopri5_detail

template <int N>
typename Dopri5<N>::State Dopri5<N>::interpolate(const StepRecord& rec, double t) {
    const double th = (t - rec.t0) / rec.span;
    const double th1 = 1.0 - th;
    State y;
    for (int i = 0; i < N; ++i) {
        y[i] = rec.rcont[0][i] +
               th * (rec.rcont[1][i] +
                     th1 * (rec.rcont[2][i] + th * (rec.rcont[3][i] + th1 * rec.rcont[4][i])));
    }
    return y;
}

template <int N>
typename Dopri5<N>::Stats Dopri5<N>::run(double t0, const State& y0, double t1,
                                         const std::function<void(const StepRecord&)>& on_step,
                                         State& y_final) {
    using namespace dopri5_detail;
    Stats stats;
    const double dir = (t1 >= t0) ? 1.0 : -1.0;
    double t = t0;
    State y = y0;
    State k1 = f_(t, y);

    auto error_norm = [&](const State& err, const State& ya, const State& yb) {
        double sum = 0.0;
        for (int i = 0; i < N; ++i) {
            const double sc = opt_.atol + opt_.rtol * std::max(std::abs(ya[i]), std::abs(yb[i]));
            const double q = err[i] / sc;
            sum += q * q;
        }
        return std::sqrt(sum / N);
    };

    double h = opt_.h_init;
    if (h == 0.0) {
        // small trial step scaled from the initial derivative
        double dn = 0.0, yn = 0.0;
        for (int i = 0; i < N; ++i) {
            dn = std::max(dn, std::abs(k1[i]));
            yn = std::max(yn, std::abs(y[i]));
        }
        h = (dn > 0.0) ? 0.01 * std::max(1.0, yn) / dn : 1e-4;
        h = std::min(h, std::abs(t1 - t0));
        if (h <= 0.0) h = 1e-8;
    }
    h *= dir;

    double facold = 1e-4;
    bool last_rejected = false;

    while (dir * (t1 - t) > 0.0) {
        if (stats.accepted + stats.rejected >= opt_.max_steps)
            throw IntegrationError("dopri5: max step count exceeded");
        if (std::abs(h) <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t)))
            throw IntegrationError("dopri5: step-size underflow");
        if (dir * (t + h - t1) > 0.0) h = t1 - t;

        State k2, k3, k4, k5, k6, k7, yt, y1;
        for (int i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
        k2 = f_(t + c2 * h, yt);
        for (int i = 0; i < N; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        k3 = f_(t + c3 * h, yt);
        for (int i = 0; i < N; ++i) yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        k4 = f_(t + c4 * h, yt);
        for (int i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        k5 = f_(t + c5 * h, yt);
        for (int i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        k6 = f_(t + h, yt);
        for (int i = 0; i < N; ++i)
            y1[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
        k7 = f_(t + h, y1);

        State err;
        for (int i = 0; i < N; ++i)
            err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                          e7 * k7[i]);
        const double en = error_norm(err, y, y1);

        constexpr double beta = 0.04, expo1 = 0.2 - beta * 0.75, safe = 0.9;
        constexpr double facmin = 0.2, facmax = 10.0;
        const double fac11 = std::pow(std::max(en, 1e-16), expo1);

        if (en <= 1.0) {
            StepRecord rec;
            rec.t0 = t;
            rec.t1 = t + h;
            rec.span = h;
            rec.y0 = y;
            rec.y1 = y1;
            for (int i = 0; i < N; ++i) {
                const double ydiff = y1[i] - y[i];
                const double bspl = h * k1[i] - ydiff;
                rec.rcont[0][i] = y[i];
                rec.rcont[1][i] = ydiff;
                rec.rcont[2][i] = bspl;
                rec.rcont[3][i] = ydiff - h * k7[i] - bspl;
                rec.rcont[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                       d6 * k6[i] + d7 * k7[i]);
            }

            if (opt_.event && opt_.event(rec.t1, y1) <= 0.0) {
                // refine the crossing on the dense interpolant; rec.span keeps
                // the dense scaling valid for the truncated step
                double lo = rec.t0, hi = rec.t1;
                for (int it = 0; it < 80 && std::abs(hi - lo) >
                                                 1e-14 * std::max(1.0, std::abs(rec.t1));
                     ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if (opt_.event(mid, interpolate(rec, mid)) <= 0.0)
                        hi = mid;
                    else
                        lo = mid;
                }
                const State y_cross = interpolate(rec, lo);
                rec.t1 = lo;
                rec.y1 = y_cross;
                ++stats.accepted;
                on_step(rec);
                stats.event_hit = true;
                stats.t_end = rec.t1;
                y_final = y_cross;
                return stats;
            }

            ++stats.accepted;
            on_step(rec);
            t = rec.t1;
            y = y1;
            k1 = k7; // first-same-as-last
            facold = std::max(en, 1e-4);
            double fac = fac11 / std::pow(facold, beta);
            fac = std::max(1.0 / facmax, std::min(1.0 / facmin, fac / safe));
            double hnew = h / fac;
            if (last_rejected) hnew = dir * std::min(std::abs(hnew), std::abs(h));
            h = hnew;
            last_rejected = false;
        } else {
            ++stats.rejected;
            h /= std::min(1.0 / facmin, fac11 / safe);
            last_rejected = true;
        }
    }

    stats.t_end = t;
    y_final = y;
    return stats;
}

/// Time-stamped sample with per-point conserved-quantity diagnostics.
struct TrajectorySample {
    double t = 0.0;
    CartesianState state;
    double energy = 0.0;
    double euler_g = 0.0;
    double dist_c1 = 0.0;
    double dist_c2 = 0.0;
};

struct IntegratorStats {
    double tol = 0.0;
    long accepted = 0;
    long rejected = 0;
    bool collision_event = false;
    double t_end = 0.0;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    IntegratorStats stats;
};

struct IntegrateOptions {
    double tol = 1e-10;
    double guard_radius = kDefaultGuardRadius;
    double sample_dt = 0.0; // 0: record accepted steps; >0: fixed stride via dense output
    long max_steps = 50'000'000;
};

/// Integrates the selected model from s0 over [t0, t1].  Stops early with
/// stats.collision_event if min_separation drops below the guard radius; the
/// last recorded sample then sits at the guard crossing.  Throws
/// IntegrationError on step-size underflow and DomainError for invalid
/// tolerances or initial data already inside the guard.
Trajectory integrate(const CartesianState& s0, const ModelSpec& model, double t0, double t1,
                     const IntegrateOptions& opt = {});

} // namespace euler2c
