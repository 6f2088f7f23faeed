#pragma once

namespace euler2c {

/// Solves zeta - e sin(zeta) = ell for the eccentric anomaly, 0 <= e < 1.
/// Newton from zeta0 = ell + e sin(ell) with a bracketing bisection fallback
/// when 1 - e cos(zeta) gets small; residual below 1e-13.  The result stays
/// on the same 2*pi branch as ell.
double solve_kepler(double e, double ell);

/// Anomaly chain.  All angles in radians; results in [0, 2*pi).
double true_from_eccentric(double e, double zeta);
double eccentric_from_true(double e, double nu);
double mean_from_eccentric(double e, double zeta);

/// Wraps an angle into [0, 2*pi).
double wrap_angle(double a);

} // namespace euler2c
