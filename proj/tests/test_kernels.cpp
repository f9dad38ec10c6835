#include <doctest.h>

#include <random>
#include <vector>

#include "volterra/kernels.hpp"
#include "volterra/series.hpp"

using namespace volterra;

namespace {

std::vector<Cplx> random_coeffs(std::mt19937_64& rng, int degree) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Cplx> coeffs(static_cast<std::size_t>(degree) + 1);
    for (Cplx& c : coeffs) c = Cplx{dist(rng), dist(rng)};
    return coeffs;
}

}  // namespace

TEST_CASE("circle_scan: parallel matches serial bit for bit") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 8; ++trial) {
        const auto coeffs = random_coeffs(rng, 40 + trial * 7);
        for (double r : {0.1, 1.0, 7.5}) {
            for (int samples : {64, 256, 520}) {
                const auto a = kernels::circle_scan_serial(coeffs, r, samples);
                const auto b = kernels::circle_scan(coeffs, r, samples);
                CHECK(a.max_abs == b.max_abs);
                CHECK(a.max_re == b.max_re);
            }
        }
    }
}

TEST_CASE("radial_profile: parallel matches serial bit for bit") {
    std::mt19937_64 rng(17);
    const auto coeffs = random_coeffs(rng, 48);
    std::vector<double> radii;
    for (double r = 0.01; r < 20.0; r *= 1.37) radii.push_back(r);

    std::vector<double> serial(radii.size());
    std::vector<double> parallel(radii.size());
    kernels::radial_profile_serial(coeffs, radii, 1.0, 1.0, 128, serial);
    kernels::radial_profile(coeffs, radii, 1.0, 1.0, 128, parallel);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        CHECK(serial[i] == parallel[i]);
    }
}

TEST_CASE("sampled maximum is nondecreasing when samples double") {
    std::mt19937_64 rng(41);
    const auto coeffs = random_coeffs(rng, 32);
    const TruncatedSeries f{std::vector<Cplx>(coeffs)};
    for (double r : {0.5, 2.0}) {
        double prev = 0.0;
        for (int samples = 16; samples <= 1024; samples *= 2) {
            const double m = max_modulus(f, r, samples);
            CHECK(m >= prev);
            prev = m;
        }
    }
}
