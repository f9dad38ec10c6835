#include "volterra/kernels.hpp"

#include <cmath>

namespace volterra::kernels {

namespace {

inline Cplx horner(std::span<const Cplx> coeffs, Cplx z) {
    Cplx acc{};
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

CircleScan circle_scan_serial(std::span<const Cplx> coeffs, double r,
                              int samples) {
    double max_abs = -1.0;
    double max_re = -INFINITY;
    for (int s = 0; s < samples; ++s) {
        const double theta = kTwoPi * s / samples;
        const Cplx z = r * Cplx{std::cos(theta), std::sin(theta)};
        const Cplx w = horner(coeffs, z);
        max_abs = std::max(max_abs, std::abs(w));
        max_re = std::max(max_re, w.real());
    }
    return {max_abs, max_re};
}

CircleScan circle_scan(std::span<const Cplx> coeffs, double r, int samples) {
    double max_abs = -1.0;
    double max_re = -INFINITY;
#pragma omp parallel for reduction(max : max_abs, max_re) schedule(static)
    for (int s = 0; s < samples; ++s) {
        const double theta = kTwoPi * s / samples;
        const Cplx z = r * Cplx{std::cos(theta), std::sin(theta)};
        const Cplx w = horner(coeffs, z);
        max_abs = std::max(max_abs, std::abs(w));
        max_re = std::max(max_re, w.real());
    }
    return {max_abs, max_re};
}

void radial_profile_serial(std::span<const Cplx> coeffs,
                           std::span<const double> radii, double alpha,
                           double p, int samples, std::span<double> out) {
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double w = std::exp(-alpha * std::pow(radii[i], p));
        out[i] = w * circle_scan_serial(coeffs, radii[i], samples).max_abs;
    }
}

void radial_profile(std::span<const Cplx> coeffs,
                    std::span<const double> radii, double alpha, double p,
                    int samples, std::span<double> out) {
    const std::int64_t n = static_cast<std::int64_t>(radii.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const double w = std::exp(-alpha * std::pow(radii[i], p));
        out[i] = w * circle_scan_serial(coeffs, radii[i], samples).max_abs;
    }
}

}  // namespace volterra::kernels
