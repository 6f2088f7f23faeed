#pragma once

#include <functional>

#include "euler2c/types.hpp"

namespace euler2c {

using ScalarField = std::function<double(const CartesianState&)>;

/// Gradient of a scalar field with respect to the canonical coordinates,
/// one Vec3 per block.  Both canonical pairs (y, x) and (yprime, xprime)
/// are differentiated; fields that ignore the primed pair just get zeros there.
struct CanonicalGradient {
    Vec3 dy;
    Vec3 dx;
    Vec3 dyprime;
    Vec3 dxprime;
};

inline constexpr double kDefaultGradStep = 1e-6;

/// Central-difference gradient with per-component step h_rel * max(1, |coord|).
/// Exact (up to roundoff) on quadratics.  Throws DomainError if the field
/// cannot be evaluated anywhere on the stencil.
CanonicalGradient grad_canonical(const ScalarField& f, const CartesianState& s,
                                 double h_rel = kDefaultGradStep);

/// {f, g} = sum_i (df/dx_i dg/dy_i - df/dy_i dg/dx_i), summed over both
/// canonical pairs.
double poisson_bracket(const ScalarField& f, const ScalarField& g, const CartesianState& s,
                       double h_rel = kDefaultGradStep);

/// Richardson-extrapolated bracket: combines evaluations at h and h/2 to
/// cancel the leading O(h^2) stencil error.
double poisson_bracket_richardson(const ScalarField& f, const ScalarField& g,
                                  const CartesianState& s, double h_rel = kDefaultGradStep);

} // namespace euler2c
