#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bswitch/bernstein.hpp"
#include "bswitch/lyapunov.hpp"
#include "bswitch/poly.hpp"
#include "bswitch/presets.hpp"
#include "bswitch/switched.hpp"
#include "bswitch/verifier.hpp"

using namespace bswitch;

namespace {

void BM_DeCasteljau(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    const auto s = step_series(m, -1.0, 1.0, 0.0);
    double x = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_series(s, x));
        x += 1e-4;
        if (x > 1.0) x = -1.0;
    }
    state.SetComplexityN(m);
}
BENCHMARK(BM_DeCasteljau)->Arg(10)->Arg(50)->Arg(100)->Arg(200)->Complexity();

void BM_PolyMul(benchmark::State& state) {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    const std::vector<std::string> vars{"x1", "x2", "x3"};
    MultiPoly p(vars), q(vars);
    for (unsigned a = 0; a <= 4; ++a) {
        for (unsigned b = 0; a + b <= 4; ++b) {
            p = p + MultiPoly::monomial(vars, {a, b, 0}, coeff(rng));
            q = q + MultiPoly::monomial(vars, {0, a, b}, coeff(rng));
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(p * q);
    }
}
BENCHMARK(BM_PolyMul);

void BM_IntervalEval(benchmark::State& state) {
    const MultiPoly p = MultiPoly::parse("-2*x1^2 - 2*x1*x2 - 8*x2^2");
    const Box b({"x1", "x2"}, {make_interval(0.0, 1.0), make_interval(0.0, 1.0)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(interval_eval(p, b));
    }
}
BENCHMARK(BM_IntervalEval);

void BM_TaylorBound(benchmark::State& state) {
    const MultiPoly p = MultiPoly::parse("-2*x1^2 - 2*x1*x2 - 8*x2^2");
    const Box b({"x1", "x2"}, {make_interval(0.0, 1.0), make_interval(0.0, 1.0)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(taylor_upper_bound(p, b));
    }
}
BENCHMARK(BM_TaylorBound);

void BM_VerifyBasicVdot(benchmark::State& state) {
    const MultiPoly p = MultiPoly::parse("-2*x1^2 - 2*x1*x2 - 8*x2^2");
    const Box b({"x1", "x2"}, {make_interval(0.0, 1.0), make_interval(0.0, 1.0)});
    VerifyConfig cfg;
    cfg.epsilon = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_ineq(p, b, cfg));
    }
}
BENCHMARK(BM_VerifyBasicVdot);

void BM_SimulateBlended(benchmark::State& state) {
    const auto sys = make_system(find_preset("example1"));
    const std::vector<double> x0{1.0, 1.0};
    const auto steps = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(sys, x0, steps * 1e-3, 1e-3, SimMode::Blended));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateBlended)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
