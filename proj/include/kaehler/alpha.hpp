#pragma once

#include <utility>
#include <vector>

#include "kaehler/differential.hpp"
#include "kaehler/errors.hpp"
#include "kaehler/poly_map.hpp"
#include "kaehler/series.hpp"

namespace kaehler {

/// Image of a truncated series automorphism inside the polynomial
/// automorphism group of the y ring. Component (r, s) lives at slot
/// (s-1)*m + (r-1) and is weighted-homogeneous of degree s.
template <RingCoeff C>
struct AlphaImage {
    PolyAutomorphism<C> base;
    unsigned source_m;
    unsigned source_N;

    const Polynomial<C>& component(unsigned r, unsigned s) const {
        DifferentialContext ctx(source_m, source_N);
        return base.forward().components[ctx.pure_y_slot(r, s)];
    }
};

/// The induced polynomial automorphism: y_rs is sent to the origin reduction
/// of the order-s differential of component r. Computed from the closed
/// coefficient formula
///   sum over weight matrices l of order s of
///   (prod_i |l_i|!) / (prod l_ij!) * a^r_{|l|} * prod y_ij^l_ij,
/// where a^r_n is the coefficient of x^n in component r and |l| is the row
/// sum vector. With verify set, the differential route is computed
/// independently and must agree.
template <RingCoeff C>
AlphaImage<C> alpha(const TruncatedSeriesMap<C>& phi, bool verify = false) {
    if (!is_automorphism(phi))
        throw ValidationError("linear part is singular; not an automorphism");
    unsigned m = phi.m();
    unsigned N = phi.N();
    DifferentialContext ctx(m, N);

    std::vector<Polynomial<C>> comps(N * m, Polynomial<C>::zero(ctx.num_y()));
    for (unsigned r = 1; r <= m; ++r) {
        for (unsigned s = 1; s <= N; ++s) {
            Polynomial<C> comp(ctx.num_y());
            for (const WeightMatrix& l : enumerate_weight_matrices(m, s)) {
                C a = phi.component(r - 1).coefficient_of(l.row_sums());
                if (a.is_zero()) continue;
                ExponentVector mono(ctx.num_y(), 0);
                for (unsigned i = 1; i <= m; ++i)
                    for (unsigned j = 1; j <= s; ++j) mono[ctx.pure_y_slot(i, j)] = l.at(i, j);
                comp.add_term(mono, scaled(a, Rational(multinomial_weight(l))));
            }
            comps[ctx.pure_y_slot(r, s)] = std::move(comp);
        }
    }

    if (verify) {
        for (unsigned r = 1; r <= m; ++r)
            for (unsigned s = 1; s <= N; ++s) {
                Polynomial<C> via_diff =
                    reduce_at_origin(higher_differential(phi.component(r - 1), s, ctx), ctx);
                if (via_diff != comps[ctx.pure_y_slot(r, s)])
                    throw StructureError("coefficient formula disagrees with the differential route");
            }
    }

    PolyEndo<C> endo(N * m, std::move(comps));
    return AlphaImage<C>{PolyAutomorphism<C>(std::move(endo)), m, N};
}

/// Reads the series coefficients back out of an image: the coefficient of
/// prod_i y_i1^(n_i) in component (r, s), s = |n|, is exactly a^r_n because
/// the corresponding weight matrix is concentrated in column 1 and has
/// prefactor 1. The reconstruction is replayed through alpha and must
/// reproduce the input, which makes malformed images loud.
template <RingCoeff C>
TruncatedSeriesMap<C> recover_series(const AlphaImage<C>& image) {
    unsigned m = image.source_m;
    unsigned N = image.source_N;
    DifferentialContext ctx(m, N);

    std::vector<Polynomial<C>> comps;
    for (unsigned r = 1; r <= m; ++r) {
        Polynomial<C> comp(m);
        for (unsigned s = 1; s <= N; ++s) {
            const Polynomial<C>& src = image.component(r, s);
            std::vector<ExponentVector> exps;
            exponents_of_degree(m, s, exps);
            for (const auto& n : exps) {
                ExponentVector probe(ctx.num_y(), 0);
                for (unsigned i = 1; i <= m; ++i) probe[ctx.pure_y_slot(i, 1)] = n[i - 1];
                C a = src.coefficient_of(probe);
                if (!a.is_zero()) comp.add_term(n, a);
            }
        }
        comps.push_back(std::move(comp));
    }
    TruncatedSeriesMap<C> phi = [&] {
        try {
            return TruncatedSeriesMap<C>(m, N, std::move(comps));
        } catch (const ValidationError& e) {
            throw StructureError(std::string("image does not decode to a series map: ") + e.what());
        }
    }();

    AlphaImage<C> replay = [&] {
        try {
            return alpha(phi);
        } catch (const ValidationError&) {
            throw StructureError("decoded linear block is singular");
        }
    }();
    if (replay.base.forward() != image.base.forward())
        throw StructureError("image is not in the range of the representation");
    return phi;
}

/// Full-information counterpart of the reduced representation: keeps the
/// base points as honest coordinates. x_i goes to component i, y_ij to the
/// order-j differential of component i, with no origin reduction.
template <RingCoeff C>
PolyEndo<C> embed_ga_forward(const PolyEndo<C>& f, unsigned N) {
    DifferentialContext ctx(f.n, N);
    std::vector<Polynomial<C>> comps;
    for (unsigned i = 0; i < f.n; ++i) comps.push_back(ctx.embed_x(f.components[i]));
    for (unsigned j = 1; j <= N; ++j)
        for (unsigned i = 0; i < f.n; ++i)
            comps.push_back(higher_differential(f.components[i], j, ctx));
    return PolyEndo<C>(ctx.num_ambient(), std::move(comps));
}

/// Embedding of automorphism groups that raises the dimension from m to
/// m + N*m: both directions come from embed_ga_forward, so the input must
/// carry its inverse.
template <RingCoeff C>
PolyAutomorphism<C> embed_ga(const PolyAutomorphism<C>& phi, unsigned N) {
    if (!phi.has_inverse())
        throw NotInvertibleError("embedding needs the inverse; attach one or invert first");
    // The automorphism constructor composes both ways, so a bogus claimed
    // inverse on phi cannot slip through.
    return PolyAutomorphism<C>(embed_ga_forward(phi.forward(), N),
                               embed_ga_forward(phi.inverse(), N));
}

/// Generator of the formal elementary subgroup: adds psi(x_1..^..x_m), which
/// must not involve x_i0, to the i0-th coordinate and fixes the rest.
template <RingCoeff C>
TruncatedSeriesMap<C> formal_elementary(unsigned m, unsigned N, unsigned i0,
                                        const Polynomial<C>& psi) {
    if (i0 < 1 || i0 > m) throw ValidationError("coordinate index out of range");
    if (psi.num_vars() != m) throw DimensionError("psi is not in the x ring");
    if (psi.depends_on(i0 - 1))
        throw ValidationError("psi must not involve the modified coordinate");
    if (!psi.constant_term().is_zero()) throw ValidationError("psi has a constant term");

    std::vector<Polynomial<C>> comps;
    for (unsigned i = 1; i <= m; ++i) {
        Polynomial<C> c = Polynomial<C>::variable(m, i - 1);
        if (i == i0) c += psi;
        comps.push_back(c);
    }
    return TruncatedSeriesMap<C>(m, N, std::move(comps));
}

/// Validated constructor for the formal triangular subgroup: component i may
/// only use x_1..x_i.
template <RingCoeff C>
TruncatedSeriesMap<C> formal_triangular(unsigned m, unsigned N,
                                        std::vector<Polynomial<C>> components) {
    TruncatedSeriesMap<C> phi(m, N, std::move(components));
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned v = i; v < m; ++v)
            if (phi.component(i - 1).depends_on(v))
                throw StructureError("component " + std::to_string(i) +
                                     " uses a variable above its index");
    return phi;
}

/// A linear substitution as a series map; the matrix must be invertible.
template <RingCoeff C>
TruncatedSeriesMap<C> linear_embed(const Matrix<C>& a, unsigned N) {
    unsigned m = a.size();
    if (a.determinant().is_zero()) throw NotInvertibleError("singular matrix");
    std::vector<Polynomial<C>> comps;
    for (unsigned i = 0; i < m; ++i) {
        Polynomial<C> c(m);
        for (unsigned j = 0; j < m; ++j) {
            ExponentVector e(m, 0);
            e[j] = 1;
            c.add_term(e, a.at(i, j));
        }
        comps.push_back(c);
    }
    return TruncatedSeriesMap<C>(m, N, std::move(comps));
}

/// Inverse image under alpha, computed on the series side where inversion is
/// cheap, then pushed forward. Keeps the resulting automorphism exact.
template <FieldCoeff C>
AlphaImage<C> alpha_with_inverse(const TruncatedSeriesMap<C>& phi, bool verify = false) {
    AlphaImage<C> img = alpha(phi, verify);
    AlphaImage<C> inv = alpha(invert(phi));
    return AlphaImage<C>{
        PolyAutomorphism<C>(img.base.forward(), inv.base.forward()),
        img.source_m, img.source_N};
}

}  // namespace kaehler
