#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "kaehler/differential.hpp"
#include "kaehler/rng.hpp"
#include "support.hpp"

using namespace kaehler;
using kaehler::testing::random_poly;

namespace {

Polynomial<Rational> xvar(unsigned m, unsigned i) { return Polynomial<Rational>::variable(m, i); }

Polynomial<Rational> yvar(const DifferentialContext& ctx, unsigned i, unsigned j) {
    return Polynomial<Rational>::variable(ctx.num_ambient(), ctx.y_slot(i, j));
}

}  // namespace

TEST_CASE("slot layout is order major") {
    DifferentialContext ctx(2, 3);
    REQUIRE(ctx.num_ambient() == 8);
    REQUIRE(ctx.num_y() == 6);
    REQUIRE(ctx.x_slot(1) == 0);
    REQUIRE(ctx.x_slot(2) == 1);
    REQUIRE(ctx.y_slot(1, 1) == 2);
    REQUIRE(ctx.y_slot(2, 1) == 3);
    REQUIRE(ctx.y_slot(1, 2) == 4);
    REQUIRE(ctx.y_slot(2, 3) == 7);
    REQUIRE(ctx.pure_y_slot(1, 1) == 0);
    REQUIRE(ctx.pure_y_slot(2, 3) == 5);
    REQUIRE(ctx.ambient_weights() == std::vector<unsigned>({0, 0, 1, 1, 2, 2, 3, 3}));
}

TEST_CASE("first order is the classical differential") {
    DifferentialContext ctx(3, 2);
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_poly(rng, 3, 3, 5);
        Polynomial<Rational> expected(ctx.num_ambient());
        for (unsigned i = 1; i <= 3; ++i) {
            ExponentVector order(3, 0);
            order[i - 1] = 1;
            expected += ctx.embed_x(f.partial_derivative(order)) * yvar(ctx, i, 1);
        }
        REQUIRE(higher_differential(f, 1, ctx) == expected);
    }
}

TEST_CASE("third differential of the square in one variable") {
    DifferentialContext ctx(1, 3);
    auto x = xvar(1, 0);
    auto f = x * x;

    auto d3 = higher_differential(f, 3, ctx);
    auto expected =
        ctx.embed_x(x.scale(Rational(2))) * yvar(ctx, 1, 3) + (yvar(ctx, 1, 1) * yvar(ctx, 1, 2)).scale(Rational(2));
    REQUIRE(d3 == expected);
    REQUIRE(d3 == taylor_oracle(f, 3, ctx));
}

TEST_CASE("differentials of constants vanish") {
    DifferentialContext ctx(2, 3);
    auto c = Polynomial<Rational>::constant(2, Rational(7));
    for (unsigned n = 1; n <= 3; ++n) REQUIRE(higher_differential(c, n, ctx).is_zero());
    REQUIRE(universal_derivation(c, ctx) == ctx.embed_x(c));
}

TEST_CASE("universal derivation in low order") {
    DifferentialContext ctx(1, 2);
    auto x = xvar(1, 0);

    REQUIRE(universal_derivation(x, ctx) ==
            ctx.embed_x(x) + yvar(ctx, 1, 1) + yvar(ctx, 1, 2));

    auto f = x * x;
    auto expected = ctx.embed_x(f) + ctx.embed_x(x.scale(Rational(2))) * yvar(ctx, 1, 1) +
                    ctx.embed_x(x.scale(Rational(2))) * yvar(ctx, 1, 2) +
                    yvar(ctx, 1, 1) * yvar(ctx, 1, 1);
    REQUIRE(universal_derivation(f, ctx) == expected);
}

TEST_CASE("substitution oracle on simple inputs") {
    DifferentialContext ctx(1, 4);
    auto x = xvar(1, 0);

    REQUIRE(taylor_oracle(x * x, 2, ctx) ==
            ctx.embed_x(x.scale(Rational(2))) * yvar(ctx, 1, 2) + yvar(ctx, 1, 1) * yvar(ctx, 1, 1));
    for (unsigned n = 1; n <= 4; ++n) REQUIRE(taylor_oracle(x, n, ctx) == yvar(ctx, 1, n));
    REQUIRE(taylor_oracle(x.pow(3), 1, ctx) == ctx.embed_x(x.pow(2).scale(Rational(3))) * yvar(ctx, 1, 1));
}

TEST_CASE("origin reduction keeps the pure differential part") {
    DifferentialContext ctx(1, 2);
    auto x = xvar(1, 0);
    auto p = ctx.embed_x(x.scale(Rational(2))) * yvar(ctx, 1, 2) + yvar(ctx, 1, 1) * yvar(ctx, 1, 1);
    auto reduced = reduce_at_origin(p, ctx);
    REQUIRE(reduced.num_vars() == 2);
    REQUIRE(reduced == Polynomial<Rational>::monomial(2, {2, 0}, Rational(1)));

    auto pure = yvar(ctx, 1, 1) * yvar(ctx, 1, 2);
    REQUIRE(reduce_at_origin(pure, ctx) ==
            Polynomial<Rational>::monomial(2, {1, 1}, Rational(1)));

    REQUIRE(reduce_at_origin(universal_derivation(x * x, ctx), ctx) ==
            Polynomial<Rational>::monomial(2, {2, 0}, Rational(1)));
}

TEST_CASE("closed formula agrees with the substitution oracle") {
    Rng rng(2718);
    int checked = 0;
    for (int trial = 0; trial < 25; ++trial) {
        unsigned m = 1 + static_cast<unsigned>(rng.below(3));
        auto f = random_poly(rng, m, 4, 9);
        for (unsigned N = 1; N <= 4; ++N) {
            DifferentialContext ctx(m, N);
            for (unsigned n = 1; n <= N; ++n) {
                REQUIRE(higher_differential(f, n, ctx) == taylor_oracle(f, n, ctx));
                ++checked;
            }
        }
    }
    REQUIRE(checked == 25 * 10);
}

TEST_CASE("order n differential obeys the order n Leibniz expansion") {
    Rng rng(3141);
    for (int trial = 0; trial < 20; ++trial) {
        unsigned m = 1 + static_cast<unsigned>(rng.below(2));
        unsigned N = 4;
        DifferentialContext ctx(m, N);
        auto f = random_poly(rng, m, 3, 5);
        auto g = random_poly(rng, m, 3, 5);
        for (unsigned n = 1; n <= N; ++n) {
            Polynomial<Rational> rhs(ctx.num_ambient());
            for (unsigned i = 0; i <= n; ++i) {
                unsigned j = n - i;
                auto di = i == 0 ? ctx.embed_x(f) : higher_differential(f, i, ctx);
                auto dj = j == 0 ? ctx.embed_x(g) : higher_differential(g, j, ctx);
                rhs += di * dj;
            }
            REQUIRE(higher_differential(f * g, n, ctx) == rhs);
        }
    }
}

TEST_CASE("differentials are weighted homogeneous") {
    Rng rng(1618);
    for (int trial = 0; trial < 15; ++trial) {
        unsigned m = 1 + static_cast<unsigned>(rng.below(3));
        DifferentialContext ctx(m, 4);
        auto weights = ctx.ambient_weights();
        auto f = random_poly(rng, m, 4, 9);
        for (unsigned n = 1; n <= 4; ++n) {
            auto d = higher_differential(f, n, ctx);
            for (const auto& [e, c] : d.terms())
                REQUIRE(weighted_degree(e, weights) == n);
        }
    }
}

TEST_CASE("differentials are linear over the ground field") {
    Rng rng(1414);
    DifferentialContext ctx(2, 3);
    for (int trial = 0; trial < 15; ++trial) {
        auto f = random_poly(rng, 2, 4, 9);
        auto g = random_poly(rng, 2, 4, 9);
        Rational a(rng.int_in(-5, 5));
        Rational b(rng.int_in(-5, 5));
        for (unsigned n = 1; n <= 3; ++n) {
            auto lhs = higher_differential(f.scale(a) + g.scale(b), n, ctx);
            REQUIRE(lhs == higher_differential(f, n, ctx).scale(a) +
                               higher_differential(g, n, ctx).scale(b));
        }
    }
}

TEST_CASE("differentials respect polynomial substitution") {
    // Images of x and its differentials under a polynomial map chain through:
    // applying d^n after substitution equals substituting into d^n.
    Rng rng(1732);
    for (int trial = 0; trial < 6; ++trial) {
        unsigned m = 1 + static_cast<unsigned>(rng.below(2));
        unsigned N = 3;
        DifferentialContext ctx(m, N);
        auto f = random_poly(rng, m, 3, 4);
        std::vector<Polynomial<Rational>> phi;
        for (unsigned i = 0; i < m; ++i) phi.push_back(random_poly(rng, m, 2, 3));

        std::vector<Polynomial<Rational>> images;
        for (unsigned i = 0; i < m; ++i) images.push_back(ctx.embed_x(phi[i]));
        for (unsigned j = 1; j <= N; ++j)
            for (unsigned i = 0; i < m; ++i)
                images.push_back(higher_differential(phi[i], j, ctx));

        auto composed = f.substitute(phi);
        for (unsigned n = 1; n <= N; ++n) {
            auto lhs = higher_differential(composed, n, ctx);
            auto rhs = higher_differential(f, n, ctx).substitute(images);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("display shape of the low order formulas") {
    // Two variables, order two: five summands with prefactors 1, 1, 1, 1/2, 1/2.
    {
        auto ms = enumerate_weight_matrices(2, 2);
        REQUIRE(ms.size() == 5);
        std::multiset<Rational> prefs;
        for (const auto& l : ms) prefs.insert(differential_prefactor(l));
        REQUIRE(prefs == std::multiset<Rational>{Rational(1), Rational(1), Rational(1),
                                                 Rational(1, 2), Rational(1, 2)});
    }
    // One variable, order three: three summands with prefactors 1, 1, 1/6.
    {
        auto ms = enumerate_weight_matrices(1, 3);
        REQUIRE(ms.size() == 3);
        std::multiset<Rational> prefs;
        for (const auto& l : ms) prefs.insert(differential_prefactor(l));
        REQUIRE(prefs == std::multiset<Rational>{Rational(1), Rational(1), Rational(1, 6)});
    }
}

TEST_CASE("order bounds are enforced") {
    DifferentialContext ctx(1, 2);
    auto x = xvar(1, 0);
    REQUIRE_THROWS_AS(higher_differential(x, 0, ctx), ValidationError);
    REQUIRE_THROWS_AS(higher_differential(x, 3, ctx), ValidationError);
    REQUIRE_THROWS_AS(taylor_oracle(x, 3, ctx), ValidationError);
    REQUIRE_THROWS_AS(higher_differential(xvar(2, 0), 1, ctx), DimensionError);
}
