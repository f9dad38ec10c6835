#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "volterra/kernels.hpp"

using namespace volterra;

namespace {

std::vector<Cplx> make_coeffs(int degree) {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Cplx> coeffs(static_cast<std::size_t>(degree) + 1);
    for (Cplx& c : coeffs) c = Cplx{dist(rng), dist(rng)};
    return coeffs;
}

std::vector<double> make_radii(int count) {
    std::vector<double> radii(static_cast<std::size_t>(count));
    double r = 1e-3;
    for (double& x : radii) {
        x = r;
        r *= 1.03;
    }
    return radii;
}

void bm_circle_scan_serial(benchmark::State& state) {
    const auto coeffs = make_coeffs(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            kernels::circle_scan_serial(coeffs, 2.5, 1024));
    }
}

void bm_circle_scan_parallel(benchmark::State& state) {
    const auto coeffs = make_coeffs(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::circle_scan(coeffs, 2.5, 1024));
    }
}

void bm_radial_profile_serial(benchmark::State& state) {
    const auto coeffs = make_coeffs(64);
    const auto radii = make_radii(static_cast<int>(state.range(0)));
    std::vector<double> out(radii.size());
    for (auto _ : state) {
        kernels::radial_profile_serial(coeffs, radii, 1.0, 1.0, 256, out);
        benchmark::DoNotOptimize(out.data());
    }
}

void bm_radial_profile_parallel(benchmark::State& state) {
    const auto coeffs = make_coeffs(64);
    const auto radii = make_radii(static_cast<int>(state.range(0)));
    std::vector<double> out(radii.size());
    for (auto _ : state) {
        kernels::radial_profile(coeffs, radii, 1.0, 1.0, 256, out);
        benchmark::DoNotOptimize(out.data());
    }
}

}  // namespace

BENCHMARK(bm_circle_scan_serial)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(bm_circle_scan_parallel)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(bm_radial_profile_serial)->Arg(128)->Arg(512);
BENCHMARK(bm_radial_profile_parallel)->Arg(128)->Arg(512);

BENCHMARK_MAIN();
