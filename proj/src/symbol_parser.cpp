#include "volterra/symbol_parser.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

namespace volterra {

SymbolParseError::SymbolParseError(const std::string& message,
                                   std::size_t position)
    : std::runtime_error(message + " (at position " +
                         std::to_string(position) + ")"),
      position_(position) {}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    void advance() { ++pos_; }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) {
            advance();
        }
    }

    bool consume(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw SymbolParseError(message, pos_);
    }

    /// Unsigned decimal literal, optional fraction and exponent.
    double number() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        if (peek() == '.') {
            advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        }
        if (peek() == 'e' || peek() == 'E') {
            const std::size_t mark = pos_;
            advance();
            if (peek() == '+' || peek() == '-') advance();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                while (std::isdigit(static_cast<unsigned char>(peek())))
                    advance();
            } else {
                pos_ = mark;
            }
        }
        if (pos_ == start) fail("expected a number");
        return std::stod(std::string(text_.substr(start, pos_ - start)));
    }

    bool at_number() const {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
    }

    /// "3", "2.5i", "i" -- a single real or imaginary part.
    Cplx simple_part() {
        if (consume('i')) return Cplx{0.0, 1.0};
        const double x = number();
        if (consume('i')) return Cplx{0.0, x};
        return Cplx{x, 0.0};
    }

    /// Body of a parenthesised literal: [+-] part [(+|-) part]
    Cplx signed_complex() {
        skip_ws();
        double sign = 1.0;
        if (consume('-')) sign = -1.0;
        else consume('+');
        skip_ws();
        Cplx value = sign * simple_part();
        skip_ws();
        if (peek() == '+' || peek() == '-') {
            const double s2 = consume('-') ? -1.0 : (advance(), 1.0);
            skip_ws();
            value += s2 * simple_part();
            skip_ws();
        }
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

struct Term {
    Cplx coeff;
    int power;
};

Term parse_term(Cursor& cur) {
    Cplx coeff{1.0, 0.0};
    bool have_coeff = false;

    if (cur.consume('(')) {
        coeff = cur.signed_complex();
        if (!cur.consume(')')) cur.fail("expected ')'");
        have_coeff = true;
    } else if (cur.at_number() || cur.peek() == 'i') {
        coeff = cur.simple_part();
        have_coeff = true;
    }

    cur.skip_ws();
    cur.consume('*');
    cur.skip_ws();

    if (!cur.consume('z')) {
        if (!have_coeff) cur.fail("expected a coefficient or 'z'");
        return {coeff, 0};
    }
    int power = 1;
    if (cur.consume('^')) {
        const double k = cur.number();
        power = static_cast<int>(k);
        if (power < 0 || k != static_cast<double>(power)) {
            cur.fail("exponent must be a nonnegative integer");
        }
    }
    return {coeff, power};
}

}  // namespace

PolynomialSymbol parse_symbol(std::string_view text) {
    Cursor cur(text);
    std::map<int, Cplx> powers;

    cur.skip_ws();
    if (cur.done()) cur.fail("empty symbol");
    double sign = 1.0;
    if (cur.consume('-')) sign = -1.0;
    else cur.consume('+');
    cur.skip_ws();
    for (;;) {
        const Term t = parse_term(cur);
        powers[t.power] += sign * t.coeff;
        cur.skip_ws();
        if (cur.done()) break;
        if (cur.consume('+')) sign = 1.0;
        else if (cur.consume('-')) sign = -1.0;
        else cur.fail("expected '+', '-' or end of input");
        cur.skip_ws();
    }

    if (auto it = powers.find(0); it != powers.end() && it->second != Cplx{}) {
        throw SymbolParseError("symbol must satisfy g(0)=0", 0);
    }
    int degree = 0;
    for (const auto& [k, c] : powers) {
        if (k > 0 && c != Cplx{}) degree = std::max(degree, k);
    }
    if (degree == 0) throw SymbolParseError("symbol must be nonconstant", 0);

    std::vector<Cplx> coeffs(static_cast<std::size_t>(degree));
    for (const auto& [k, c] : powers) {
        if (k >= 1 && k <= degree) coeffs[k - 1] = c;
    }
    return PolynomialSymbol(std::move(coeffs));
}

namespace {

std::string format_real(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

}  // namespace

std::string format_complex(Cplx c) {
    if (c.imag() == 0.0) return format_real(c.real());
    if (c.real() == 0.0) return format_real(c.imag()) + "i";
    std::string out = format_real(c.real());
    if (c.imag() >= 0.0) out += "+";
    out += format_real(c.imag()) + "i";
    return out;
}

Cplx parse_complex(std::string_view text) {
    Cursor cur(text);
    bool parenthesised = false;
    cur.skip_ws();
    if (cur.consume('(')) parenthesised = true;
    const Cplx value = cur.signed_complex();
    if (parenthesised && !cur.consume(')')) cur.fail("expected ')'");
    cur.skip_ws();
    if (!cur.done()) cur.fail("trailing input after complex literal");
    return value;
}

std::string format_symbol(const PolynomialSymbol& g) {
    std::string out;
    for (int k = g.degree(); k >= 1; --k) {
        const Cplx c = g.coeff(k);
        if (c == Cplx{}) continue;

        std::string coeff_text;
        Cplx magnitude = c;
        bool negative = false;
        if ((c.imag() == 0.0 && c.real() < 0.0) ||
            (c.real() == 0.0 && c.imag() < 0.0)) {
            negative = true;
            magnitude = -c;
        }
        if (magnitude == Cplx{1.0, 0.0}) {
            coeff_text = "";
        } else if (magnitude.imag() == 0.0) {
            coeff_text = format_real(magnitude.real());
        } else if (magnitude.real() == 0.0) {
            coeff_text = magnitude.imag() == 1.0
                             ? "i"
                             : format_real(magnitude.imag()) + "i";
        } else {
            coeff_text = "(" + format_complex(magnitude) + ")";
        }

        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += coeff_text + "z";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace volterra
