#pragma once

#include <vector>

#include "volterra/series.hpp"

namespace volterra {

/// Exact polynomial symbol g with g(0)=0: g(z) = b_1 z + ... + b_n z^n,
/// b_n != 0. Leading coefficient and lower part are the quantities the
/// spectral classifiers read off.
class PolynomialSymbol {
public:
    /// coeffs holds b_1..b_n (constant term implicitly 0).
    explicit PolynomialSymbol(std::vector<Cplx> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()); }
    Cplx leading_coeff() const { return coeffs_.back(); }

    /// b_k for 1 <= k <= degree; zero otherwise.
    Cplx coeff(int k) const {
        return (k >= 1 && k <= degree()) ? coeffs_[k - 1] : Cplx{};
    }

    /// g(z) - beta z^n as a series (may be identically zero).
    TruncatedSeries lower_part() const;
    bool has_lower_part() const;

    TruncatedSeries as_series() const;
    TruncatedSeries derivative_series() const;

    const std::vector<Cplx>& tail_coeffs() const { return coeffs_; }

private:
    std::vector<Cplx> coeffs_;
};

}  // namespace volterra
