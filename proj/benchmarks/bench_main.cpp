#include <benchmark/benchmark.h>

#include "euler2c/delaunay.hpp"
#include "euler2c/first_integrals.hpp"
#include "euler2c/integrate.hpp"
#include "euler2c/kepler.hpp"
#include "euler2c/numdiff.hpp"
#include "euler2c/portrait.hpp"
#include "euler2c/secular.hpp"

namespace {

using namespace euler2c;

const CartesianState kState{{0.0, 1.05, 0.1}, {1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}};
const TwoCentreParams kParams{1.0, 0.1};

void KeplerSolve(benchmark::State& state) {
    double ell = 0.0;
    for (auto _ : state) {
        ell += 0.37;
        benchmark::DoNotOptimize(solve_kepler(0.8, ell));
    }
}
BENCHMARK(KeplerSolve);

void IntegrateOrbit(benchmark::State& state) {
    IntegrateOptions opt;
    opt.tol = 1e-10;
    for (auto _ : state) {
        auto traj = integrate(kState, kParams, 0.0, 10.0, opt);
        benchmark::DoNotOptimize(traj.samples.size());
    }
}
BENCHMARK(IntegrateOrbit);

void PoissonBracket(benchmark::State& state) {
    const ScalarField h = [](const CartesianState& s) {
        return two_centre_hamiltonian(s, kParams);
    };
    const ScalarField g = [](const CartesianState& s) {
        return euler_integral(s, kParams.m, kParams.eps);
    };
    for (auto _ : state) benchmark::DoNotOptimize(poisson_bracket_richardson(h, g, kState));
}
BENCHMARK(PoissonBracket);

void ElementExtraction(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cartesian_to_delaunay(kState, 1.0));
}
BENCHMARK(ElementExtraction);

void AveragedPotential(benchmark::State& state) {
    const SecularPoint pt{0.3, 1.0, 0.0, 0.5};
    for (auto _ : state) benchmark::DoNotOptimize(averaged_potential(pt, 1.0));
}
BENCHMARK(AveragedPotential);

void ActionIntegral(benchmark::State& state) {
    const PortraitSpec spec{0.5, 0.75, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(action_integral(spec));
}
BENCHMARK(ActionIntegral);

} // namespace

BENCHMARK_MAIN();
