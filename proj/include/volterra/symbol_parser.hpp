#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "volterra/symbol.hpp"

namespace volterra {

class SymbolParseError : public std::runtime_error {
public:
    SymbolParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parse a univariate polynomial in z over complex literals, e.g.
/// "6z^2 - z", "(1+2i)z^3 + z", "i*z". Rejects nonzero constant terms
/// ("symbol must satisfy g(0)=0") and constant polynomials.
PolynomialSymbol parse_symbol(std::string_view text);

/// Canonical rendering; format_symbol(parse_symbol(t)) reparses to
/// identical coefficients.
std::string format_symbol(const PolynomialSymbol& g);

/// Parse a standalone complex literal: "2", "-1.5i", "2-1i", "(0.3+0.4i)".
Cplx parse_complex(std::string_view text);

std::string format_complex(Cplx c);

}  // namespace volterra
