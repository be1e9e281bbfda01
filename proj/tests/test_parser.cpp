#include <catch2/catch_amalgamated.hpp>

#include "kaehler/format.hpp"
#include "kaehler/parse.hpp"
#include "support.hpp"

using namespace kaehler;
using kaehler::testing::random_poly;

TEST_CASE("simple expressions") {
    NameScheme xs = NameScheme::x_only(2);
    auto x1 = Polynomial<Rational>::variable(2, 0);
    auto x2 = Polynomial<Rational>::variable(2, 1);

    REQUIRE(parse_polynomial("x1 + x1^2", xs) == x1 + x1.pow(2));
    REQUIRE(parse_polynomial("1/2*x1^2*x2 - x2", xs) ==
            (x1.pow(2) * x2).scale(Rational(1, 2)) - x2);
    REQUIRE(parse_polynomial("0", xs).is_zero());
    REQUIRE(parse_polynomial("(x1 + x2)^2", xs) == (x1 + x2) * (x1 + x2));
    REQUIRE(parse_polynomial("-x1^2", xs) == -(x1.pow(2)));
    REQUIRE(parse_polynomial("2*-x1", xs) == x1.scale(Rational(-2)));
    REQUIRE(parse_polynomial("7/3", xs) == Polynomial<Rational>::constant(2, Rational(7, 3)));
}

TEST_CASE("one-variable aliases") {
    NameScheme xs = NameScheme::x_only(1);
    auto x = Polynomial<Rational>::variable(1, 0);
    REQUIRE(parse_polynomial("x + x^2", xs) == x + x.pow(2));
    REQUIRE(parse_polynomial("x1 + x^3", xs) == x + x.pow(3));

    NameScheme ys = NameScheme::pure_y(1, 3);
    REQUIRE(parse_polynomial("y2", ys) == Polynomial<Rational>::variable(3, 1));
    REQUIRE(parse_polynomial("y1_2", ys) == Polynomial<Rational>::variable(3, 1));

    NameScheme amb = NameScheme::ambient(2, 2);
    REQUIRE(parse_polynomial("d2x1", amb) == Polynomial<Rational>::variable(6, 4));
    REQUIRE(parse_polynomial("y1_2", amb) == Polynomial<Rational>::variable(6, 4));
}

TEST_CASE("positioned errors") {
    NameScheme xs = NameScheme::x_only(2);

    auto pos_of = [&](const std::string& text) {
        try {
            parse_polynomial(text, xs);
        } catch (const ParseError& e) {
            return e.position;
        }
        FAIL("expected a parse error for: " + text);
        return std::size_t{0};
    };

    REQUIRE(pos_of("x1^(-1)") == 3);
    REQUIRE(pos_of("x1 + ") == 5);
    REQUIRE(pos_of("x9") == 0);
    REQUIRE(pos_of("x1 $ x2") == 3);
    REQUIRE(pos_of("(x1") == 3);
    REQUIRE(pos_of("x1^x2") == 3);
    REQUIRE(pos_of("1/0") == 2);
    REQUIRE(pos_of("x1 x2") == 3);
    REQUIRE(pos_of("x1^999999999999") == 3);

    try {
        parse_polynomial("x1 + zz*x2", xs);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(std::string(e.what()).find("zz") != std::string::npos);
        REQUIRE(e.position == 5);
    }
}

TEST_CASE("token streams carry positions") {
    auto toks = tokenize("x1 + 2*y3_1");
    REQUIRE(toks.back().kind == ExprToken::End);
    for (std::size_t i = 1; i < toks.size(); ++i)
        REQUIRE(toks[i - 1].position < toks[i].position);
    REQUIRE(toks[0].kind == ExprToken::Identifier);
    REQUIRE(toks[0].lexeme == "x1");
    REQUIRE(toks[1].kind == ExprToken::Operator);
    REQUIRE(toks[2].kind == ExprToken::Number);
    REQUIRE(toks[2].position == 5);
}

TEST_CASE("series maps from text") {
    auto phi = parse_series_map({"x1 + x2^2", "x2"}, 2, 2);
    REQUIRE(phi.m() == 2);
    REQUIRE(phi.component(0) ==
            Polynomial<Rational>::variable(2, 0) + Polynomial<Rational>::variable(2, 1).pow(2));

    REQUIRE_THROWS_AS(parse_series_map({"1 + x1"}, 1, 2), ValidationError);
    try {
        parse_series_map({"x1", "1 + x2"}, 2, 2);
        FAIL("expected a constant-term rejection");
    } catch (const ValidationError& e) {
        REQUIRE(std::string(e.what()).find("component 2") != std::string::npos);
    }

    std::vector<std::string> warnings;
    auto trimmed = parse_series_map({"x1 + x1^5"}, 1, 3, &warnings);
    REQUIRE(trimmed.component(0) == Polynomial<Rational>::variable(1, 0));
    REQUIRE(warnings.size() == 1);
    REQUIRE(warnings[0].find("component 1") != std::string::npos);

    REQUIRE_THROWS_AS(parse_series_map({"x1"}, 2, 2), ValidationError);
}

TEST_CASE("render and parse are mutually inverse") {
    Rng rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned nv = 1 + static_cast<unsigned>(rng.below(3));
        NameScheme xs = NameScheme::x_only(nv);
        auto p = random_poly(rng, nv, 4, 9);
        // Give some coefficients denominators.
        auto q = p.scale_rational(Rational(1, 1 + static_cast<long long>(rng.below(5))));
        REQUIRE(parse_polynomial(render(q, xs), xs) == q);
    }

    for (int trial = 0; trial < 50; ++trial) {
        unsigned m = 1 + static_cast<unsigned>(rng.below(2));
        unsigned N = 1 + static_cast<unsigned>(rng.below(3));
        NameScheme ys = NameScheme::pure_y(m, N);
        Rng inner(rng.next_u64());
        auto p = random_poly(inner, m * N, 3, 9);
        REQUIRE(parse_polynomial(render(p, ys), ys) == p);
    }
}

TEST_CASE("fuzzed inputs never escape the error contract") {
    Rng rng(777);
    NameScheme xs = NameScheme::x_only(3);
    const std::string alphabet = "x123+-*/^() yd_";
    for (int trial = 0; trial < 3000; ++trial) {
        std::string text;
        unsigned len = static_cast<unsigned>(rng.below(24));
        for (unsigned i = 0; i < len; ++i) {
            if (rng.below(8) == 0)
                text += static_cast<char>(rng.below(256));
            else
                text += alphabet[rng.below(alphabet.size())];
        }
        try {
            auto p = parse_polynomial(text, xs);
            (void)p;
        } catch (const ParseError&) {
            // expected shape for bad input
        }
    }
}
