#include "euler2c/numdiff.hpp"

#include <cmath>

namespace euler2c {

namespace {

double* component(CartesianState& s, int block, int i) {
    Vec3* v = nullptr;
    switch (block) {
        case 0: v = &s.y; break;
        case 1: v = &s.x; break;
        case 2: v = &s.yprime; break;
        default: v = &s.xprime; break;
    }
    return &(*v)[i];
}

double diff_component(const ScalarField& f, const CartesianState& s, int block, int i,
                      double h_rel) {
    CartesianState sp = s, sm = s;
    double* cp = component(sp, block, i);
    double* cm = component(sm, block, i);
    const double c0 = *cp;
    double h = h_rel * std::max(1.0, std::abs(c0));
    // snap so that c0 + h and c0 - h are exactly representable
    volatile double t = c0 + h;
    h = t - c0;
    *cp = c0 + h;
    *cm = c0 - h;
    const double fp = f(sp);
    const double fm = f(sm);
    if (!std::isfinite(fp) || !std::isfinite(fm))
        throw DomainError("grad_canonical: field not finite on stencil");
    return (fp - fm) / (2.0 * h);
}

} // namespace

CanonicalGradient grad_canonical(const ScalarField& f, const CartesianState& s, double h_rel) {
    if (!(h_rel > 0.0)) throw DomainError("grad_canonical: h_rel must be positive");
    CanonicalGradient g;
    for (int i = 0; i < 3; ++i) {
        g.dy[i] = diff_component(f, s, 0, i, h_rel);
        g.dx[i] = diff_component(f, s, 1, i, h_rel);
        g.dyprime[i] = diff_component(f, s, 2, i, h_rel);
        g.dxprime[i] = diff_component(f, s, 3, i, h_rel);
    }
    return g;
}

double poisson_bracket(const ScalarField& f, const ScalarField& g, const CartesianState& s,
                       double h_rel) {
    const CanonicalGradient df = grad_canonical(f, s, h_rel);
    const CanonicalGradient dg = grad_canonical(g, s, h_rel);
    return dot(df.dx, dg.dy) - dot(df.dy, dg.dx) + dot(df.dxprime, dg.dyprime) -
           dot(df.dyprime, dg.dxprime);
}

double poisson_bracket_richardson(const ScalarField& f, const ScalarField& g,
                                  const CartesianState& s, double h_rel) {
    const double coarse = poisson_bracket(f, g, s, h_rel);
    const double fine = poisson_bracket(f, g, s, h_rel / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

} // namespace euler2c
