#pragma once

#include <vector>

#include "kaehler/errors.hpp"
#include "kaehler/linalg.hpp"
#include "kaehler/polynomial.hpp"
#include "kaehler/rng.hpp"

namespace kaehler {

/// Automorphism candidate of k[[x_1..x_m]] / (x_1..x_m)^(N+1): an m-tuple of
/// polynomials in m variables with zero constant term, kept truncated at
/// total degree N. Group law is substitution followed by truncation.
template <RingCoeff C>
class TruncatedSeriesMap {
public:
    TruncatedSeriesMap(unsigned m, unsigned N, std::vector<Polynomial<C>> components)
        : m_(m), N_(N), comps_(std::move(components)) {
        if (m == 0 || N == 0) throw ValidationError("series map needs m, N >= 1");
        if (comps_.size() != m_) throw DimensionError("component count must equal m");
        for (unsigned i = 0; i < m_; ++i) {
            if (comps_[i].num_vars() != m_)
                throw DimensionError("component lives in the wrong ring");
            if (!comps_[i].constant_term().is_zero())
                throw ValidationError("component " + std::to_string(i + 1) + " has a constant term");
            comps_[i] = comps_[i].truncate_total_degree(N_);
        }
    }

    static TruncatedSeriesMap identity(unsigned m, unsigned N) {
        std::vector<Polynomial<C>> comps;
        for (unsigned i = 0; i < m; ++i) comps.push_back(Polynomial<C>::variable(m, i));
        return TruncatedSeriesMap(m, N, std::move(comps));
    }

    unsigned m() const { return m_; }
    unsigned N() const { return N_; }
    const Polynomial<C>& component(unsigned i) const { return comps_.at(i); }
    const std::vector<Polynomial<C>>& components() const { return comps_; }

    /// Degree-1 coefficient matrix: entry (i, j) is the x_j coefficient of
    /// component i.
    Matrix<C> linear_part() const {
        Matrix<C> a(m_);
        for (unsigned i = 0; i < m_; ++i)
            for (unsigned j = 0; j < m_; ++j) {
                ExponentVector e(m_, 0);
                e[j] = 1;
                a.at(i, j) = comps_[i].coefficient_of(e);
            }
        return a;
    }

    friend bool operator==(const TruncatedSeriesMap& a, const TruncatedSeriesMap& b) {
        return a.m_ == b.m_ && a.N_ == b.N_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const TruncatedSeriesMap& a, const TruncatedSeriesMap& b) {
        return !(a == b);
    }

private:
    unsigned m_;
    unsigned N_;
    std::vector<Polynomial<C>> comps_;
};

template <RingCoeff C>
bool is_automorphism(const TruncatedSeriesMap<C>& phi) {
    return !phi.linear_part().determinant().is_zero();
}

/// Group law: component i of the result is phi_i(psi_1, ..., psi_m),
/// truncated at total degree N.
template <RingCoeff C>
TruncatedSeriesMap<C> compose(const TruncatedSeriesMap<C>& phi, const TruncatedSeriesMap<C>& psi) {
    if (phi.m() != psi.m() || phi.N() != psi.N())
        throw DimensionError("composition needs matching m and N");
    std::vector<Polynomial<C>> comps;
    for (unsigned i = 0; i < phi.m(); ++i)
        comps.push_back(phi.component(i).substitute(psi.components()).truncate_total_degree(phi.N()));
    return TruncatedSeriesMap<C>(phi.m(), phi.N(), std::move(comps));
}

/// Group inverse, solved degree by degree: start from the inverse of the
/// linear part, then at each degree d subtract A^-1 times the degree-d defect
/// of compose(phi, psi). Each step is exact and kills one degree.
template <FieldCoeff C>
TruncatedSeriesMap<C> invert(const TruncatedSeriesMap<C>& phi) {
    unsigned m = phi.m();
    unsigned N = phi.N();
    Matrix<C> ainv = [&] {
        try {
            return phi.linear_part().inverse();
        } catch (const NotInvertibleError&) {
            throw NotInvertibleError("series map has singular linear part");
        }
    }();

    std::vector<Polynomial<C>> psi;
    for (unsigned i = 0; i < m; ++i) {
        Polynomial<C> p(m);
        for (unsigned j = 0; j < m; ++j) {
            ExponentVector e(m, 0);
            e[j] = 1;
            p.add_term(e, ainv.at(i, j));
        }
        psi.push_back(p);
    }
    TruncatedSeriesMap<C> inv(m, N, std::move(psi));

    for (unsigned d = 2; d <= N; ++d) {
        TruncatedSeriesMap<C> probe = compose(phi, inv);
        std::vector<Polynomial<C>> defect;
        for (unsigned i = 0; i < m; ++i) {
            Polynomial<C> err = probe.component(i) - Polynomial<C>::variable(m, i);
            defect.push_back(err.homogeneous_part(d));
        }
        std::vector<Polynomial<C>> next;
        for (unsigned i = 0; i < m; ++i) {
            Polynomial<C> corr(m);
            for (unsigned j = 0; j < m; ++j) corr += defect[j].scale(ainv.at(i, j));
            next.push_back(inv.component(i) - corr);
        }
        inv = TruncatedSeriesMap<C>(m, N, std::move(next));
    }
    return inv;
}

/// Deterministic generator with guaranteed invertible linear part. Integer
/// coefficients in [-coeff_bound, coeff_bound]; roughly half the higher
/// monomials are present.
inline TruncatedSeriesMap<Rational> random_automorphism(unsigned m, unsigned N, std::uint64_t seed,
                                                        long long coeff_bound = 5) {
    if (m == 0 || N == 0) throw ValidationError("series map needs m, N >= 1");
    Rng rng(seed);

    Matrix<Rational> lin(m);
    bool ok = false;
    for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j) lin.at(i, j) = Rational(rng.int_in(-coeff_bound, coeff_bound));
        ok = !lin.determinant().is_zero();
    }
    while (!ok) {
        // A + I is singular for at most m shifts, so this terminates.
        for (unsigned i = 0; i < m; ++i) lin.at(i, i) += Rational(1);
        ok = !lin.determinant().is_zero();
    }

    std::vector<Polynomial<Rational>> comps;
    for (unsigned i = 0; i < m; ++i) {
        Polynomial<Rational> p(m);
        for (unsigned j = 0; j < m; ++j) {
            ExponentVector e(m, 0);
            e[j] = 1;
            p.add_term(e, lin.at(i, j));
        }
        for (unsigned d = 2; d <= N; ++d) {
            std::vector<ExponentVector> exps;
            exponents_of_degree(m, d, exps);
            for (const auto& e : exps)
                if (rng.coin()) p.add_term(e, Rational(rng.int_in(-coeff_bound, coeff_bound)));
        }
        comps.push_back(p);
    }
    return TruncatedSeriesMap<Rational>(m, N, std::move(comps));
}

}  // namespace kaehler
