#pragma once

#include <vector>

#include "kaehler/errors.hpp"
#include "kaehler/polynomial.hpp"
#include "kaehler/weights.hpp"

namespace kaehler {

/// Slot layout for the ambient ring k[x_1..x_m, y_11..y_mN] where y_ij stands
/// for the j-th differential of x_i. The y-block is order-major so that all
/// differentials of a given order sit together.
struct DifferentialContext {
    unsigned m;
    unsigned N;

    DifferentialContext(unsigned m_, unsigned N_) : m(m_), N(N_) {
        if (m == 0 || N == 0) throw ValidationError("context needs m, N >= 1");
    }

    unsigned num_ambient() const { return m + N * m; }
    unsigned num_y() const { return N * m; }

    /// 1-based variable index -> ambient slot.
    unsigned x_slot(unsigned i) const { return i - 1; }
    /// 1-based (i, j) -> ambient slot of y_ij.
    unsigned y_slot(unsigned i, unsigned j) const { return m + (j - 1) * m + (i - 1); }
    /// 1-based (i, j) -> slot in the pure y ring (x slots removed).
    unsigned pure_y_slot(unsigned i, unsigned j) const { return (j - 1) * m + (i - 1); }

    /// Weighted degrees on the ambient ring: x free, y_ij of weight j.
    std::vector<unsigned> ambient_weights() const {
        std::vector<unsigned> w(num_ambient(), 0);
        for (unsigned j = 1; j <= N; ++j)
            for (unsigned i = 1; i <= m; ++i) w[y_slot(i, j)] = j;
        return w;
    }

    std::vector<unsigned> pure_y_weights() const {
        std::vector<unsigned> w(num_y(), 0);
        for (unsigned j = 1; j <= N; ++j)
            for (unsigned i = 1; i <= m; ++i) w[pure_y_slot(i, j)] = j;
        return w;
    }

    template <RingCoeff C>
    Polynomial<C> embed_x(const Polynomial<C>& f) const {
        if (f.num_vars() != m) throw DimensionError("polynomial is not in the x ring");
        return f.embedded(num_ambient());
    }
};

/// Order-n differential of f, as an element of the ambient (x, y) ring:
/// the sum over all weight matrices l of order n of
///   1/(prod l_ij!) * (mixed partial of f, |l_i| times in x_i) * prod y_ij^l_ij.
template <RingCoeff C>
Polynomial<C> higher_differential(const Polynomial<C>& f, unsigned n, const DifferentialContext& ctx) {
    if (f.num_vars() != ctx.m) throw DimensionError("polynomial is not in the x ring");
    if (n < 1 || n > ctx.N) throw ValidationError("differential order out of range");

    Polynomial<C> result(ctx.num_ambient());
    for (const WeightMatrix& l : enumerate_weight_matrices(ctx.m, n)) {
        Polynomial<C> part = f.partial_derivative(l.row_sums());
        if (part.is_zero()) continue;
        ExponentVector ymono(ctx.num_ambient(), 0);
        for (unsigned i = 1; i <= ctx.m; ++i)
            for (unsigned j = 1; j <= n; ++j) ymono[ctx.y_slot(i, j)] = l.at(i, j);
        Polynomial<C> term = ctx.embed_x(part) * Polynomial<C>::monomial(ctx.num_ambient(), ymono, C::one());
        result += term.scale_rational(differential_prefactor(l));
    }
    return result;
}

/// f + d^1 f + ... + d^N f, the ring homomorphism underlying everything here.
template <RingCoeff C>
Polynomial<C> universal_derivation(const Polynomial<C>& f, const DifferentialContext& ctx) {
    Polynomial<C> result = ctx.embed_x(f);
    for (unsigned n = 1; n <= ctx.N; ++n) result += higher_differential(f, n, ctx);
    return result;
}

/// Independent cross-check: d^n f read off as the t^n coefficient of
/// f(x_i + sum_j y_ij t^j), computed by brute-force substitution in one
/// auxiliary slot. Shares no code with higher_differential past the
/// polynomial core.
template <RingCoeff C>
Polynomial<C> taylor_oracle(const Polynomial<C>& f, unsigned n, const DifferentialContext& ctx) {
    if (f.num_vars() != ctx.m) throw DimensionError("polynomial is not in the x ring");
    if (n < 1 || n > ctx.N) throw ValidationError("differential order out of range");

    unsigned wide = ctx.num_ambient() + 1;  // trailing slot holds t
    unsigned t = wide - 1;
    std::vector<Polynomial<C>> images;
    for (unsigned i = 1; i <= ctx.m; ++i) {
        Polynomial<C> im = Polynomial<C>::variable(wide, ctx.x_slot(i));
        for (unsigned j = 1; j <= ctx.N; ++j) {
            ExponentVector e(wide, 0);
            e[ctx.y_slot(i, j)] = 1;
            e[t] = j;
            im.add_term(e, C::one());
        }
        images.push_back(im);
    }

    Polynomial<C> expanded = f.substitute(images);
    Polynomial<C> result(ctx.num_ambient());
    for (const auto& [e, c] : expanded.terms()) {
        if (e[t] != n) continue;
        ExponentVector ne(e.begin(), e.end() - 1);
        result.add_term(ne, c);
    }
    return result;
}

/// Sets every x slot to zero, leaving a polynomial in the y ring. This is the
/// constant-term reduction that turns differentials into coordinates of the
/// induced polynomial map.
template <RingCoeff C>
Polynomial<C> reduce_at_origin(const Polynomial<C>& p, const DifferentialContext& ctx) {
    if (p.num_vars() != ctx.num_ambient()) throw DimensionError("polynomial is not in the ambient ring");
    Polynomial<C> result(ctx.num_y());
    for (const auto& [e, c] : p.terms()) {
        bool has_x = false;
        for (unsigned i = 0; i < ctx.m && !has_x; ++i) has_x = e[i] != 0;
        if (has_x) continue;
        ExponentVector ne(e.begin() + ctx.m, e.end());
        result.add_term(ne, c);
    }
    return result;
}

}  // namespace kaehler
