#include <doctest.h>

#include <random>
#include <sstream>

#include "volterra/symbol_parser.hpp"

using namespace volterra;

TEST_CASE("parse_symbol basics") {
    const PolynomialSymbol z = parse_symbol("z");
    CHECK(z.degree() == 1);
    CHECK(z.leading_coeff() == Cplx{1, 0});

    const PolynomialSymbol g = parse_symbol("6z^2 - z");
    CHECK(g.degree() == 2);
    CHECK(g.coeff(2) == Cplx{6, 0});
    CHECK(g.coeff(1) == Cplx{-1, 0});

    const PolynomialSymbol iz = parse_symbol("i*z");
    CHECK(iz.coeff(1) == Cplx{0, 1});
    CHECK(parse_symbol("iz").coeff(1) == Cplx{0, 1});
    CHECK(parse_symbol("-z").coeff(1) == Cplx{-1, 0});

    const PolynomialSymbol c = parse_symbol("(1+2i)z^3 + z");
    CHECK(c.degree() == 3);
    CHECK(c.coeff(3) == Cplx{1, 2});
    CHECK(c.coeff(1) == Cplx{1, 0});
    CHECK(c.coeff(2) == Cplx{});

    CHECK(parse_symbol("2.5z^2").coeff(2) == Cplx{2.5, 0});
    CHECK(parse_symbol("1e-2z").coeff(1) == Cplx{0.01, 0});
    CHECK(parse_symbol("z + z").coeff(1) == Cplx{2, 0});
    CHECK(parse_symbol("  z^2   -   3z ").coeff(1) == Cplx{-3, 0});
}

TEST_CASE("parse_symbol rejections") {
    CHECK_THROWS_WITH(parse_symbol("z + 1"),
                      doctest::Contains("symbol must satisfy g(0)=0"));
    CHECK_THROWS_WITH(parse_symbol("3"),
                      doctest::Contains("symbol must satisfy g(0)=0"));
    CHECK_THROWS_AS(parse_symbol(""), SymbolParseError);
    CHECK_THROWS_AS(parse_symbol("z^"), SymbolParseError);
    CHECK_THROWS_AS(parse_symbol("z +"), SymbolParseError);
    CHECK_THROWS_AS(parse_symbol("(1+2i z"), SymbolParseError);
    CHECK_THROWS_AS(parse_symbol("w^2"), SymbolParseError);
    CHECK_THROWS_AS(parse_symbol("z^-1"), SymbolParseError);
    CHECK_THROWS_AS(parse_symbol("z^2 - z^2"), std::exception);

    try {
        parse_symbol("z^2 + $");
        CHECK(false);
    } catch (const SymbolParseError& e) {
        CHECK(e.position() == 6);
    }
}

TEST_CASE("format_symbol round trips") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int deg = 1 + static_cast<int>(rng() % 5);
        std::vector<Cplx> coeffs(static_cast<std::size_t>(deg));
        for (Cplx& c : coeffs) {
            switch (rng() % 4) {
                case 0: c = Cplx{dist(rng), 0}; break;
                case 1: c = Cplx{0, dist(rng)}; break;
                case 2: c = Cplx{dist(rng), dist(rng)}; break;
                default: c = Cplx{}; break;
            }
        }
        while (std::abs(coeffs.back()) == 0.0) {
            coeffs.back() = Cplx{dist(rng), dist(rng)};
        }
        const PolynomialSymbol g(coeffs);
        const PolynomialSymbol back = parse_symbol(format_symbol(g));
        REQUIRE(back.degree() == g.degree());
        for (int k = 1; k <= g.degree(); ++k) {
            CHECK(back.coeff(k) == g.coeff(k));  // bitwise round trip
        }
    }
}

TEST_CASE("format_symbol fixed strings reparse") {
    for (const char* s :
         {"z", "-z", "6z^2 - z", "(1+2i)z^3 + z", "0.5z^4", "i*z",
          "z^5 - iz^3 + (2-3i)z"}) {
        const PolynomialSymbol g = parse_symbol(s);
        const PolynomialSymbol back = parse_symbol(format_symbol(g));
        REQUIRE(back.degree() == g.degree());
        for (int k = 1; k <= g.degree(); ++k) {
            CHECK(back.coeff(k) == g.coeff(k));
        }
    }
}

TEST_CASE("parse_complex") {
    CHECK(parse_complex("2") == Cplx{2, 0});
    CHECK(parse_complex("-1.5i") == Cplx{0, -1.5});
    CHECK(parse_complex("2-1i") == Cplx{2, -1});
    CHECK(parse_complex("(0.3+0.4i)") == Cplx{0.3, 0.4});
    CHECK(parse_complex("i") == Cplx{0, 1});
    CHECK(parse_complex("-i") == Cplx{0, -1});
    CHECK(parse_complex("0") == Cplx{});
    CHECK(parse_complex("1e3") == Cplx{1000, 0});
    CHECK_THROWS_AS(parse_complex(""), SymbolParseError);
    CHECK_THROWS_AS(parse_complex("z"), SymbolParseError);
    CHECK_THROWS_AS(parse_complex("1+"), SymbolParseError);
}

TEST_CASE("format_complex round trips") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Cplx c{dist(rng), dist(rng)};
        CHECK(parse_complex(format_complex(c)) == c);
    }
    CHECK(parse_complex(format_complex(Cplx{})) == Cplx{});
    CHECK(parse_complex(format_complex(Cplx{0, -1})) == Cplx{0, -1});
    CHECK(parse_complex(format_complex(Cplx{1.0 / 3.0, 0})) ==
          Cplx{1.0 / 3.0, 0});
}
