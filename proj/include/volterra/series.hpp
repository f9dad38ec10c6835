#pragma once

#include <complex>
#include <span>
#include <vector>

namespace volterra {

using Cplx = std::complex<double>;

/// Degree-N complex Taylor polynomial standing in for an entire function
/// near 0. Coefficients 0..N of every arithmetic result are the exact
/// coefficients of the underlying formal-series operation, up to rounding.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Cplx> coeffs);

    static TruncatedSeries zero(int degree = 0);
    static TruncatedSeries constant(Cplx c);
    static TruncatedSeries monomial(int k, Cplx c = Cplx{1.0, 0.0});

    int trunc_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of z^k; zero outside the stored range.
    Cplx coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k]
                                                                : Cplx{};
    }

    std::span<const Cplx> coeffs() const { return coeffs_; }

    /// Pad with zeros or drop high-order coefficients to the given degree.
    TruncatedSeries truncated(int degree) const;

    bool is_zero() const;

private:
    std::vector<Cplx> coeffs_;
};

/// Sampling count that resolves the highest retained frequency.
int default_circle_samples(int degree);

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const TruncatedSeries& f, Cplx c);

/// Cauchy product, exact on coefficients 0..out_degree.
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g,
                    int out_degree);
/// Cauchy product at the default out_degree = max of the input degrees.
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

TruncatedSeries derive(const TruncatedSeries& f);
TruncatedSeries antiderive(const TruncatedSeries& f);

/// exp(f) to out_degree by the recurrence (exp f)' = f' (exp f).
/// A nonzero constant term is absorbed into the scalar factor exp(c_0).
TruncatedSeries exp_series(const TruncatedSeries& f, int out_degree);

Cplx eval(const TruncatedSeries& f, Cplx z);

/// max |f| over `samples` equispaced angles on |z|=r; a lower bound on the
/// true M(f,r). samples <= 0 selects the default for the series degree.
double max_modulus(const TruncatedSeries& f, double r, int samples = 0);
/// max Re f over the same sampling.
double max_real_part(const TruncatedSeries& f, double r, int samples = 0);

/// Largest coefficientwise |difference| over degrees 0..degree.
double prefix_distance(const TruncatedSeries& f, const TruncatedSeries& g,
                       int degree);
bool prefix_equal(const TruncatedSeries& f, const TruncatedSeries& g,
                  int degree, double tol = 1e-12);

}  // namespace volterra
