#include "volterra/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "volterra/kernels.hpp"

namespace volterra {

namespace {

void check_finite(const std::vector<Cplx>& coeffs) {
    for (const Cplx& c : coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument(
                "TruncatedSeries: coefficients must be finite");
        }
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Cplx> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument(
            "TruncatedSeries: at least the constant coefficient is required");
    }
    check_finite(coeffs_);
}

TruncatedSeries TruncatedSeries::zero(int degree) {
    return TruncatedSeries(std::vector<Cplx>(static_cast<std::size_t>(
        std::max(degree, 0) + 1)));
}

TruncatedSeries TruncatedSeries::constant(Cplx c) {
    return TruncatedSeries({c});
}

TruncatedSeries TruncatedSeries::monomial(int k, Cplx c) {
    if (k < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<Cplx> coeffs(static_cast<std::size_t>(k) + 1);
    coeffs.back() = c;
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::truncated(int degree) const {
    if (degree < 0) throw std::invalid_argument("truncated: negative degree");
    std::vector<Cplx> out(static_cast<std::size_t>(degree) + 1);
    const std::size_t n = std::min(out.size(), coeffs_.size());
    std::copy_n(coeffs_.begin(), n, out.begin());
    return TruncatedSeries(std::move(out));
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](Cplx c) { return c == Cplx{}; });
}

int default_circle_samples(int degree) {
    return std::max(256, 8 * (degree + 1));
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
    const int n = std::max(f.trunc_degree(), g.trunc_degree());
    std::vector<Cplx> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out[k] = f.coeff(k) + g.coeff(k);
    return TruncatedSeries(std::move(out));
}

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    return add(f, scale(g, Cplx{-1.0, 0.0}));
}

TruncatedSeries scale(const TruncatedSeries& f, Cplx c) {
    std::vector<Cplx> out(f.coeffs().begin(), f.coeffs().end());
    for (Cplx& x : out) x *= c;
    return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g,
                    int out_degree) {
    if (out_degree < 0) throw std::invalid_argument("mul: negative out_degree");
    std::vector<Cplx> out(static_cast<std::size_t>(out_degree) + 1);
    const int nf = f.trunc_degree();
    const int ng = g.trunc_degree();
    for (int k = 0; k <= out_degree; ++k) {
        Cplx acc{};
        const int lo = std::max(0, k - ng);
        const int hi = std::min(k, nf);
        for (int j = lo; j <= hi; ++j) acc += f.coeff(j) * g.coeff(k - j);
        out[k] = acc;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    return mul(f, g, std::max(f.trunc_degree(), g.trunc_degree()));
}

TruncatedSeries derive(const TruncatedSeries& f) {
    const int n = f.trunc_degree();
    if (n == 0) return TruncatedSeries::zero(0);
    std::vector<Cplx> out(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) out[k - 1] = static_cast<double>(k) * f.coeff(k);
    return TruncatedSeries(std::move(out));
}

TruncatedSeries antiderive(const TruncatedSeries& f) {
    const int n = f.trunc_degree();
    std::vector<Cplx> out(static_cast<std::size_t>(n) + 2);
    for (int k = 0; k <= n; ++k) out[k + 1] = f.coeff(k) / (k + 1.0);
    return TruncatedSeries(std::move(out));
}

TruncatedSeries exp_series(const TruncatedSeries& f, int out_degree) {
    if (out_degree < 0) {
        throw std::invalid_argument("exp_series: negative out_degree");
    }
    std::vector<Cplx> e(static_cast<std::size_t>(out_degree) + 1);
    e[0] = std::exp(f.coeff(0));
    // (k+1) e_{k+1} = sum_{j=0..k} (j+1) c_{j+1} e_{k-j}
    for (int k = 0; k < out_degree; ++k) {
        Cplx acc{};
        for (int j = 0; j <= k; ++j) {
            acc += (j + 1.0) * f.coeff(j + 1) * e[k - j];
        }
        e[k + 1] = acc / (k + 1.0);
    }
    return TruncatedSeries(std::move(e));
}

Cplx eval(const TruncatedSeries& f, Cplx z) {
    Cplx acc{};
    for (int k = f.trunc_degree(); k >= 0; --k) acc = acc * z + f.coeff(k);
    return acc;
}

double max_modulus(const TruncatedSeries& f, double r, int samples) {
    if (r < 0.0) throw std::invalid_argument("max_modulus: negative radius");
    if (samples <= 0) samples = default_circle_samples(f.trunc_degree());
    return kernels::circle_scan(f.coeffs(), r, samples).max_abs;
}

double max_real_part(const TruncatedSeries& f, double r, int samples) {
    if (r < 0.0) throw std::invalid_argument("max_real_part: negative radius");
    if (samples <= 0) samples = default_circle_samples(f.trunc_degree());
    return kernels::circle_scan(f.coeffs(), r, samples).max_re;
}

double prefix_distance(const TruncatedSeries& f, const TruncatedSeries& g,
                       int degree) {
    double worst = 0.0;
    for (int k = 0; k <= degree; ++k) {
        worst = std::max(worst, std::abs(f.coeff(k) - g.coeff(k)));
    }
    return worst;
}

bool prefix_equal(const TruncatedSeries& f, const TruncatedSeries& g,
                  int degree, double tol) {
    return prefix_distance(f, g, degree) <= tol;
}

}  // namespace volterra
