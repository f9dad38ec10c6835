#include "volterra/symbol.hpp"

#include <cmath>
#include <stdexcept>

namespace volterra {

PolynomialSymbol::PolynomialSymbol(std::vector<Cplx> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("symbol must be nonconstant");
    }
    if (coeffs_.back() == Cplx{}) {
        throw std::invalid_argument(
            "PolynomialSymbol: leading coefficient must be nonzero");
    }
    for (const Cplx& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument(
                "PolynomialSymbol: coefficients must be finite");
        }
    }
}

TruncatedSeries PolynomialSymbol::lower_part() const {
    std::vector<Cplx> out(coeffs_.size());  // degree n, top coeff dropped
    for (int k = 1; k < degree(); ++k) out[k] = coeff(k);
    return TruncatedSeries(std::move(out));
}

bool PolynomialSymbol::has_lower_part() const {
    for (int k = 1; k < degree(); ++k) {
        if (coeff(k) != Cplx{}) return true;
    }
    return false;
}

TruncatedSeries PolynomialSymbol::as_series() const {
    std::vector<Cplx> out(coeffs_.size() + 1);
    for (int k = 1; k <= degree(); ++k) out[k] = coeff(k);
    return TruncatedSeries(std::move(out));
}

TruncatedSeries PolynomialSymbol::derivative_series() const {
    return derive(as_series());
}

}  // namespace volterra
