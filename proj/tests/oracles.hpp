// Test-only oracles, independent of the library's arithmetic paths:
//  - exact rational-coefficient series arithmetic (boost cpp_rational)
//  - composite Gauss-Legendre quadrature along the segment [0, z]
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <functional>
#include <vector>

namespace oracles {

using Rat = boost::multiprecision::cpp_rational;

struct RatC {
    Rat re = 0;
    Rat im = 0;

    RatC() = default;
    RatC(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit RatC(const std::complex<double>& z)
        : re(Rat(z.real())), im(Rat(z.imag())) {}

    RatC operator+(const RatC& o) const { return {re + o.re, im + o.im}; }
    RatC operator-(const RatC& o) const { return {re - o.re, im - o.im}; }
    RatC operator*(const RatC& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    RatC operator*(const Rat& s) const { return {re * s, im * s}; }
    RatC operator/(const Rat& s) const { return {re / s, im / s}; }

    std::complex<double> to_double() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

using RatSeries = std::vector<RatC>;  // coefficients, degree 0 upward

inline RatSeries from_complex(const std::vector<std::complex<double>>& c) {
    RatSeries out;
    out.reserve(c.size());
    for (const auto& x : c) out.emplace_back(x);
    return out;
}

inline RatC coeff(const RatSeries& f, std::size_t k) {
    return k < f.size() ? f[k] : RatC{};
}

inline RatSeries add(const RatSeries& f, const RatSeries& g) {
    RatSeries out(std::max(f.size(), g.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = coeff(f, k) + coeff(g, k);
    }
    return out;
}

inline RatSeries mul(const RatSeries& f, const RatSeries& g,
                     std::size_t out_degree) {
    RatSeries out(out_degree + 1);
    for (std::size_t k = 0; k <= out_degree; ++k) {
        RatC acc;
        for (std::size_t j = 0; j <= k; ++j) {
            acc = acc + coeff(f, j) * coeff(g, k - j);
        }
        out[k] = acc;
    }
    return out;
}

inline RatSeries derive(const RatSeries& f) {
    if (f.size() <= 1) return RatSeries(1);
    RatSeries out(f.size() - 1);
    for (std::size_t k = 1; k < f.size(); ++k) {
        out[k - 1] = f[k] * Rat(static_cast<long>(k));
    }
    return out;
}

inline RatSeries antiderive(const RatSeries& f) {
    RatSeries out(f.size() + 1);
    for (std::size_t k = 0; k < f.size(); ++k) {
        out[k + 1] = f[k] / Rat(static_cast<long>(k + 1));
    }
    return out;
}

// exp of a series with zero constant term, exact to out_degree
inline RatSeries exp_series(const RatSeries& f, std::size_t out_degree) {
    RatSeries e(out_degree + 1);
    e[0] = RatC{1, 0};
    for (std::size_t k = 0; k < out_degree; ++k) {
        RatC acc;
        for (std::size_t j = 0; j <= k; ++j) {
            acc = acc + coeff(f, j + 1) * Rat(static_cast<long>(j + 1)) *
                            e[k - j];
        }
        e[k + 1] = acc / Rat(static_cast<long>(k + 1));
    }
    return e;
}

/// Composite Gauss-Legendre quadrature of `integrand` over the straight
/// segment from 0 to z: panels x 8-node rule.
inline std::complex<double> segment_integral(
    const std::function<std::complex<double>(std::complex<double>)>& integrand,
    std::complex<double> z, int panels = 8) {
    // 8-point Gauss-Legendre nodes/weights on [-1, 1]
    static const double nodes[8] = {
        -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
        -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
        0.7966664774136267,  0.9602898564975363};
    static const double weights[8] = {
        0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
        0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
        0.2223810344533745, 0.1012285362903763};

    std::complex<double> acc{};
    for (int p = 0; p < panels; ++p) {
        const double t0 = static_cast<double>(p) / panels;
        const double t1 = static_cast<double>(p + 1) / panels;
        const double half = 0.5 * (t1 - t0);
        const double mid = 0.5 * (t0 + t1);
        for (int q = 0; q < 8; ++q) {
            const double t = mid + half * nodes[q];
            acc += weights[q] * half * integrand(t * z);
        }
    }
    return acc * z;  // d zeta = z dt along the segment
}

}  // namespace oracles
