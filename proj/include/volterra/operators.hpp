#pragma once

#include <vector>

#include "volterra/series.hpp"
#include "volterra/symbol.hpp"

namespace volterra {

inline constexpr int kDefaultWorkingDegree = 64;

/// V_g f = J(f g'), computed at the coefficient level. out_degree < 0
/// selects deg f + deg g (the exact result degree for polynomial f).
TruncatedSeries apply_volterra(const PolynomialSymbol& g,
                               const TruncatedSeries& f, int out_degree = -1);

/// M_h f = h f at the managed out_degree (default: max input degree).
TruncatedSeries apply_mult(const TruncatedSeries& h, const TruncatedSeries& f,
                           int out_degree = -1);

/// R_{lambda,g} h = h(0) e^{g/lambda} + e^{g/lambda} J(e^{-g/lambda} h').
/// The output solves f - (1/lambda) V_g f = h on coefficients 0..out_degree.
/// Throws std::invalid_argument at lambda = 0 (0 is always in the spectrum).
TruncatedSeries resolvent_apply(const PolynomialSymbol& g, Cplx lambda,
                                const TruncatedSeries& h,
                                int out_degree = kDefaultWorkingDegree);

/// S_{lambda,g} h = e^{g/lambda} J(h' e^{-g/lambda}) on the subspace
/// h(0) = 0; composition M_G o J o M_{1/G} o D with G = e^{g/lambda}.
TruncatedSeries s_operator_apply(const PolynomialSymbol& g, Cplx lambda,
                                 const TruncatedSeries& h,
                                 int out_degree = kDefaultWorkingDegree);

/// T_gamma h = e^{gamma z^n} J(z^{n-1} h e^{-gamma z^n}).
TruncatedSeries t_gamma_apply(int n, Cplx gamma, const TruncatedSeries& h,
                              int out_degree = kDefaultWorkingDegree);

/// Max coefficient deviation, over degrees 0..(out_degree - deg g), between
/// the two sides of the integration-by-parts identity
///   e^{g/l} J(h' e^{-g/l}) = h + (1/l) e^{g/l} J(h g' e^{-g/l}),
/// each side computed by an independent series pipeline.
double integration_by_parts_residual(const PolynomialSymbol& g, Cplx lambda,
                                     const TruncatedSeries& h,
                                     int out_degree = kDefaultWorkingDegree);

/// N x N leading submatrix of V_g in the monomial basis:
/// A[j+m][j] = m b_m / (j+m) for 1 <= m <= deg g, all other entries zero.
class SectionMatrix {
public:
    SectionMatrix(int size, std::vector<Cplx> entries);

    int size() const { return size_; }
    Cplx at(int row, int col) const { return entries_[row * size_ + col]; }
    const std::vector<Cplx>& entries() const { return entries_; }

    std::vector<Cplx> apply(const std::vector<Cplx>& x) const;
    SectionMatrix multiply(const SectionMatrix& other) const;
    double max_abs_entry() const;

private:
    int size_;
    std::vector<Cplx> entries_;
};

SectionMatrix finite_section(const PolynomialSymbol& g, int size);

}  // namespace volterra
