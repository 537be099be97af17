#include <benchmark/benchmark.h>

#include "ce/indicator_geometry.hpp"
#include "ce/lp_optimizer.hpp"
#include "ce/special_math.hpp"

namespace {

void bm_bessel_j(benchmark::State& state) {
    double nu = 0.5 * state.range(0) - 1.0;
    double x = 0.0;
    for (auto _ : state) {
        x += 0.37;
        if (x > 40.0) x -= 40.0;
        benchmark::DoNotOptimize(ce::bessel_j(nu, x));
    }
}
BENCHMARK(bm_bessel_j)->Arg(2)->Arg(8)->Arg(24);

void bm_autocorr_eval(benchmark::State& state) {
    int n = (int)state.range(0);
    std::vector<ce::Point> centers;
    for (int i = 0; i < 4; ++i) {
        ce::Point c(n, 0.0);
        c[0] = 1.1 * i;
        centers.push_back(c);
    }
    ce::BallUnion s(n, 0.5, centers);
    std::vector<double> x(n, 0.0);
    for (auto _ : state) {
        x[0] += 0.013;
        if (x[0] > 2.0) x[0] = 0.0;
        benchmark::DoNotOptimize(ce::autocorr_eval(s, x));
    }
}
BENCHMARK(bm_autocorr_eval)->Arg(1)->Arg(3);

void bm_solve_feasibility(benchmark::State& state) {
    ce::LpGridSpec grid;
    grid.neg_points = 80;
    grid.pos_points = 80;
    auto problem = ce::build_problem(1, (int)state.range(0), 1.05, grid);
    for (auto _ : state) benchmark::DoNotOptimize(ce::solve_feasibility(problem));
}
BENCHMARK(bm_solve_feasibility)->Arg(6)->Arg(12);

} // namespace

BENCHMARK_MAIN();
