#include "volterra/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace volterra {

namespace {

void require_nonzero_lambda(Cplx lambda) {
    if (lambda == Cplx{}) {
        throw std::invalid_argument("resolvent undefined at 0");
    }
}

void require_vanishing_at_zero(const TruncatedSeries& h) {
    if (h.coeff(0) != Cplx{}) {
        throw std::invalid_argument("requires h in X_0");
    }
}

}  // namespace

TruncatedSeries apply_volterra(const PolynomialSymbol& g,
                               const TruncatedSeries& f, int out_degree) {
    if (out_degree < 0) out_degree = f.trunc_degree() + g.degree();
    if (out_degree == 0) return TruncatedSeries::zero(0);
    const TruncatedSeries integrand =
        mul(f, g.derivative_series(), out_degree - 1);
    return antiderive(integrand).truncated(out_degree);
}

TruncatedSeries apply_mult(const TruncatedSeries& h, const TruncatedSeries& f,
                           int out_degree) {
    if (out_degree < 0) out_degree = std::max(h.trunc_degree(), f.trunc_degree());
    return mul(h, f, out_degree);
}

TruncatedSeries resolvent_apply(const PolynomialSymbol& g, Cplx lambda,
                                const TruncatedSeries& h, int out_degree) {
    require_nonzero_lambda(lambda);
    const TruncatedSeries g_over_lambda = scale(g.as_series(), 1.0 / lambda);
    const TruncatedSeries expo = exp_series(g_over_lambda, out_degree);
    const TruncatedSeries expo_inv =
        exp_series(scale(g_over_lambda, Cplx{-1.0, 0.0}), out_degree);
    const TruncatedSeries inner =
        antiderive(mul(expo_inv, derive(h), std::max(out_degree - 1, 0)));
    TruncatedSeries f = mul(expo, inner, out_degree);
    if (h.coeff(0) != Cplx{}) {
        f = add(f, scale(expo, h.coeff(0)));
    }
    return f.truncated(out_degree);
}

TruncatedSeries s_operator_apply(const PolynomialSymbol& g, Cplx lambda,
                                 const TruncatedSeries& h, int out_degree) {
    require_nonzero_lambda(lambda);
    require_vanishing_at_zero(h);
    // M_G o J o M_{1/G} o D with G = e^{g/lambda}
    const TruncatedSeries g_over_lambda = scale(g.as_series(), 1.0 / lambda);
    const TruncatedSeries big_g = exp_series(g_over_lambda, out_degree);
    const TruncatedSeries big_g_inv =
        exp_series(scale(g_over_lambda, Cplx{-1.0, 0.0}), out_degree);
    const TruncatedSeries step =
        antiderive(apply_mult(big_g_inv, derive(h), std::max(out_degree - 1, 0)));
    return apply_mult(big_g, step, out_degree);
}

TruncatedSeries t_gamma_apply(int n, Cplx gamma, const TruncatedSeries& h,
                              int out_degree) {
    if (n < 1) throw std::invalid_argument("t_gamma_apply: n >= 1 required");
    const TruncatedSeries gz = TruncatedSeries::monomial(n, gamma);
    const TruncatedSeries expo = exp_series(gz, out_degree);
    const TruncatedSeries expo_inv =
        exp_series(TruncatedSeries::monomial(n, -gamma), out_degree);
    TruncatedSeries integrand =
        mul(TruncatedSeries::monomial(n - 1), mul(h, expo_inv, out_degree),
            std::max(out_degree - 1, 0));
    return mul(expo, antiderive(integrand), out_degree);
}

double integration_by_parts_residual(const PolynomialSymbol& g, Cplx lambda,
                                     const TruncatedSeries& h,
                                     int out_degree) {
    require_nonzero_lambda(lambda);
    require_vanishing_at_zero(h);
    const TruncatedSeries lhs = s_operator_apply(g, lambda, h, out_degree);

    const TruncatedSeries g_over_lambda = scale(g.as_series(), 1.0 / lambda);
    const TruncatedSeries expo = exp_series(g_over_lambda, out_degree);
    const TruncatedSeries expo_inv =
        exp_series(scale(g_over_lambda, Cplx{-1.0, 0.0}), out_degree);
    const TruncatedSeries inner = antiderive(
        mul(mul(h, g.derivative_series(), out_degree), expo_inv,
            std::max(out_degree - 1, 0)));
    const TruncatedSeries rhs =
        add(h, scale(mul(expo, inner, out_degree), 1.0 / lambda));

    const int check_degree = std::max(out_degree - g.degree(), 0);
    return prefix_distance(lhs, rhs, check_degree);
}

SectionMatrix::SectionMatrix(int size, std::vector<Cplx> entries)
    : size_(size), entries_(std::move(entries)) {
    if (size_ < 2 || entries_.size() != static_cast<std::size_t>(size_) * size_) {
        throw std::invalid_argument("SectionMatrix: bad dimensions");
    }
}

std::vector<Cplx> SectionMatrix::apply(const std::vector<Cplx>& x) const {
    if (x.size() != static_cast<std::size_t>(size_)) {
        throw std::invalid_argument("SectionMatrix::apply: size mismatch");
    }
    std::vector<Cplx> y(x.size());
    for (int i = 0; i < size_; ++i) {
        Cplx acc{};
        for (int j = 0; j < size_; ++j) acc += at(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

SectionMatrix SectionMatrix::multiply(const SectionMatrix& other) const {
    if (other.size_ != size_) {
        throw std::invalid_argument("SectionMatrix::multiply: size mismatch");
    }
    std::vector<Cplx> out(entries_.size());
    for (int i = 0; i < size_; ++i) {
        for (int k = 0; k < size_; ++k) {
            const Cplx a = at(i, k);
            if (a == Cplx{}) continue;
            for (int j = 0; j < size_; ++j) {
                out[i * size_ + j] += a * other.at(k, j);
            }
        }
    }
    return SectionMatrix(size_, std::move(out));
}

double SectionMatrix::max_abs_entry() const {
    double worst = 0.0;
    for (const Cplx& e : entries_) worst = std::max(worst, std::abs(e));
    return worst;
}

SectionMatrix finite_section(const PolynomialSymbol& g, int size) {
    if (size < 2) throw std::invalid_argument("finite_section: size >= 2");
    std::vector<Cplx> entries(static_cast<std::size_t>(size) * size);
    // column j holds the coefficients of V_g(z^j)
    for (int j = 0; j < size; ++j) {
        for (int m = 1; m <= g.degree(); ++m) {
            const int row = j + m;
            if (row >= size) break;
            entries[row * size + j] =
                static_cast<double>(m) * g.coeff(m) / static_cast<double>(j + m);
        }
    }
    return SectionMatrix(size, std::move(entries));
}

}  // namespace volterra
