#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "kaehler/polynomial.hpp"
#include "kaehler/rng.hpp"
#include "support.hpp"

using namespace kaehler;
using kaehler::testing::random_poly;

namespace {

// Independent multiplication oracle: plain coefficient convolution over a
// map, no reuse of Polynomial::operator*.
Polynomial<Rational> convolution_mul(const Polynomial<Rational>& a, const Polynomial<Rational>& b) {
    std::map<ExponentVector, Rational> acc;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            ExponentVector e(a.num_vars());
            for (unsigned i = 0; i < a.num_vars(); ++i) e[i] = ea[i] + eb[i];
            acc[e] += ca * cb;
        }
    Polynomial<Rational> out(a.num_vars());
    for (const auto& [e, c] : acc) out.add_term(e, c);
    return out;
}

// Independent single-step derivative: multiply by the exponent, decrement it.
Polynomial<Rational> derivative_once(const Polynomial<Rational>& p, unsigned slot) {
    Polynomial<Rational> out(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[slot] == 0) continue;
        ExponentVector ne = e;
        --ne[slot];
        out.add_term(ne, c * Rational(static_cast<long long>(e[slot])));
    }
    return out;
}

Polynomial<Rational> derivative_oracle(const Polynomial<Rational>& p, const ExponentVector& order) {
    Polynomial<Rational> out = p;
    for (unsigned slot = 0; slot < order.size(); ++slot)
        for (unsigned k = 0; k < order[slot]; ++k) out = derivative_once(out, slot);
    return out;
}

}  // namespace

TEST_CASE("basic arithmetic") {
    auto x1 = Polynomial<Rational>::variable(2, 0);
    auto x2 = Polynomial<Rational>::variable(2, 1);

    REQUIRE((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
    REQUIRE((x1 * x1).scale(Rational(0)).is_zero());

    auto x = Polynomial<Rational>::variable(1, 0);
    auto p = x + x * x;
    Polynomial<Rational> expected(1);
    expected.add_term({2}, Rational(1));
    expected.add_term({3}, Rational(2));
    expected.add_term({4}, Rational(1));
    REQUIRE(p * p == expected);
    REQUIRE(p * p == convolution_mul(p, p));
}

TEST_CASE("arithmetic rejects mixed rings") {
    auto a = Polynomial<Rational>::variable(2, 0);
    auto b = Polynomial<Rational>::variable(3, 0);
    REQUIRE_THROWS_AS(a + b, DimensionError);
    REQUIRE_THROWS_AS(a * b, DimensionError);
}

TEST_CASE("iterated partial derivatives") {
    auto x1 = Polynomial<Rational>::variable(2, 0);
    auto x2 = Polynomial<Rational>::variable(2, 1);

    auto p = x1 * x1 * x2;
    REQUIRE(p.partial_derivative({1, 1}) == (x1 + x1));

    auto x = Polynomial<Rational>::variable(1, 0);
    REQUIRE((x * x * x).partial_derivative({3}) == Polynomial<Rational>::constant(1, Rational(6)));

    auto q = x1 * x1 + x2 * x2;
    REQUIRE(q.partial_derivative({2, 0}) == Polynomial<Rational>::constant(2, Rational(2)));
    REQUIRE(q.partial_derivative({2, 0}) == derivative_oracle(q, {2, 0}));

    REQUIRE(p.partial_derivative({0, 2}).is_zero());
}

TEST_CASE("substitution") {
    auto x1 = Polynomial<Rational>::variable(2, 0);
    auto x2 = Polynomial<Rational>::variable(2, 1);
    auto y = Polynomial<Rational>::variable(1, 0);

    REQUIRE((x1 + x2).substitute({y * y, y * y * y}) == y * y + y * y * y);

    // x^2 composed with x + t*y1 in the ring (x, t, y1).
    auto x = Polynomial<Rational>::variable(3, 0);
    auto t = Polynomial<Rational>::variable(3, 1);
    auto y1 = Polynomial<Rational>::variable(3, 2);
    auto sq = Polynomial<Rational>::variable(1, 0).pow(2);
    auto composed = sq.substitute({x + t * y1});
    REQUIRE(composed == x * x + (x * y1 * t).scale(Rational(2)) + y1 * y1 * t * t);

    auto p = x1 * x1 * x2 + x2;
    REQUIRE(p.substitute({x1, x2}) == p);

    REQUIRE_THROWS_AS(p.substitute({x1}), DimensionError);
}

TEST_CASE("degree truncation") {
    auto x = Polynomial<Rational>::variable(1, 0);
    auto p = x + x.pow(2) + x.pow(3);
    REQUIRE(p.truncate_total_degree(2) == x + x.pow(2));

    // Weighted truncation, weight j on the j-th slot: y1*y2 has weight 3.
    auto y1 = Polynomial<Rational>::variable(2, 0);
    auto y2 = Polynomial<Rational>::variable(2, 1);
    auto q = y1 * y2 + y1;
    REQUIRE(q.truncate_total_degree(2, std::vector<unsigned>{1, 2}) == y1);

    auto no_const = x + x.pow(2);
    REQUIRE(no_const.truncate_total_degree(0).is_zero());
}

TEST_CASE("coefficient lookup") {
    auto x1 = Polynomial<Rational>::variable(2, 0);
    auto x2 = Polynomial<Rational>::variable(2, 1);
    auto p = (x1 * x1 * x2).scale(Rational(5));

    REQUIRE(p.coefficient_of({2, 1}) == Rational(5));
    REQUIRE(p.coefficient_of({0, 0}) == Rational(0));
    REQUIRE(((x1 + x2) * (x1 + x2)).coefficient_of({1, 1}) == Rational(2));
}

TEST_CASE("ring axioms on random polynomials") {
    Rng rng(91);
    for (int trial = 0; trial < 40; ++trial) {
        unsigned nv = 1 + static_cast<unsigned>(rng.below(3));
        auto a = random_poly(rng, nv, 3, 6);
        auto b = random_poly(rng, nv, 3, 6);
        auto c = random_poly(rng, nv, 3, 6);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
        REQUIRE(a * b == convolution_mul(a, b));
    }
}

TEST_CASE("mixed partials commute") {
    Rng rng(92);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned nv = 2 + static_cast<unsigned>(rng.below(2));
        auto p = random_poly(rng, nv, 4, 6);
        unsigned i = static_cast<unsigned>(rng.below(nv));
        unsigned j = static_cast<unsigned>(rng.below(nv));
        ExponentVector oi(nv, 0), oj(nv, 0);
        oi[i] = 1;
        oj[j] = 1;
        REQUIRE(p.partial_derivative(oi).partial_derivative(oj) ==
                p.partial_derivative(oj).partial_derivative(oi));
    }
}

TEST_CASE("substitution is compatible with image composition") {
    Rng rng(93);
    for (int trial = 0; trial < 25; ++trial) {
        auto p = random_poly(rng, 2, 2, 4);
        std::vector<Polynomial<Rational>> f;
        std::vector<Polynomial<Rational>> g;
        for (int i = 0; i < 2; ++i) f.push_back(random_poly(rng, 2, 2, 3));
        for (int i = 0; i < 2; ++i) g.push_back(random_poly(rng, 2, 2, 3));
        std::vector<Polynomial<Rational>> fg;
        for (const auto& fi : f) fg.push_back(fi.substitute(g));
        REQUIRE(p.substitute(f).substitute(g) == p.substitute(fg));
    }
}

TEST_CASE("first-order Leibniz rule") {
    Rng rng(94);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned nv = 1 + static_cast<unsigned>(rng.below(3));
        auto p = random_poly(rng, nv, 3, 6);
        auto q = random_poly(rng, nv, 3, 6);
        unsigned slot = static_cast<unsigned>(rng.below(nv));
        ExponentVector order(nv, 0);
        order[slot] = 1;
        REQUIRE((p * q).partial_derivative(order) ==
                p * q.partial_derivative(order) + q * p.partial_derivative(order));
    }
}

TEST_CASE("slot remapping and embedding") {
    auto x = Polynomial<Rational>::variable(1, 0);
    auto p = x + x.pow(3);
    auto wide = p.embedded(4);
    REQUIRE(wide.num_vars() == 4);
    REQUIRE(wide.coefficient_of({3, 0, 0, 0}) == Rational(1));
    REQUIRE_THROWS_AS(wide.with_slots(1, {0, 1, 2, 3}), DimensionError);
    auto swapped = wide.with_slots(4, {2, 0, 1, 3});
    REQUIRE(swapped.coefficient_of({0, 0, 3, 0}) == Rational(1));
}

TEST_CASE("canonical term order puts higher degrees first") {
    auto x1 = Polynomial<Rational>::variable(2, 0);
    auto x2 = Polynomial<Rational>::variable(2, 1);
    auto p = x2 + x1 * x1 + x1 * x2;
    std::vector<ExponentVector> order;
    for (const auto& [e, c] : p.terms()) order.push_back(e);
    REQUIRE(order == std::vector<ExponentVector>{{2, 0}, {1, 1}, {0, 1}});
}
