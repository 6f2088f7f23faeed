#pragma once

#include <cmath>
#include <functional>
#include <numbers>

#include "euler2c/types.hpp"

namespace euler2c {

struct QuadratureResult {
    double value = 0.0;
    int nodes = 0;
    bool converged = false;
};

/// Mean of f over one period [0, 2*pi) by the uniform trapezoid rule with
/// node doubling; spectrally accurate for smooth periodic integrands.
/// Stops when the relative change drops below rel_tol.
inline QuadratureResult periodic_mean(const std::function<double(double)>& f,
                                      double rel_tol = 1e-11, int n0 = 64,
                                      int n_max = 1 << 21) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    int n = n0;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += f(two_pi * k / n);
    double value = sum / n;

    QuadratureResult res;
    while (n < n_max) {
        // refine with the midpoints of the current grid
        double extra = 0.0;
        for (int k = 0; k < n; ++k) extra += f(two_pi * (k + 0.5) / n);
        n *= 2;
        sum += extra;
        const double next = sum / n;
        const double change = std::abs(next - value) / std::max(1.0, std::abs(next));
        value = next;
        if (change < rel_tol) {
            res.converged = true;
            break;
        }
    }
    res.value = value;
    res.nodes = n;
    return res;
}

} // namespace euler2c
