#pragma once

#include <span>

#include "volterra/series.hpp"

namespace volterra::kernels {

struct CircleScan {
    double max_abs;
    double max_re;
};

/// Horner-evaluate the polynomial at `samples` equispaced angles on |z|=r
/// and take running maxima of |f| and Re f. Serial reference.
CircleScan circle_scan_serial(std::span<const Cplx> coeffs, double r,
                              int samples);

/// OpenMP variant; bit-identical to the serial scan (max reductions over the
/// same per-sample values).
CircleScan circle_scan(std::span<const Cplx> coeffs, double r, int samples);

/// out[i] = exp(-alpha * radii[i]^p) * max|f| on the circle radii[i].
void radial_profile_serial(std::span<const Cplx> coeffs,
                           std::span<const double> radii, double alpha,
                           double p, int samples, std::span<double> out);
void radial_profile(std::span<const Cplx> coeffs,
                    std::span<const double> radii, double alpha, double p,
                    int samples, std::span<double> out);

}  // namespace volterra::kernels
