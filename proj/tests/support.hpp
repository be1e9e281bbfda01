#pragma once

#include "kaehler/polynomial.hpp"
#include "kaehler/rational.hpp"
#include "kaehler/rng.hpp"

namespace kaehler::testing {

/// Random sparse polynomial: every monomial of total degree <= max_deg is
/// present with probability ~1/2, integer coefficients in [-bound, bound].
inline Polynomial<Rational> random_poly(Rng& rng, unsigned num_vars, unsigned max_deg,
                                        long long bound) {
    Polynomial<Rational> p(num_vars);
    for (unsigned d = 0; d <= max_deg; ++d) {
        std::vector<ExponentVector> exps;
        exponents_of_degree(num_vars, d, exps);
        for (const auto& e : exps)
            if (rng.coin()) p.add_term(e, Rational(rng.int_in(-bound, bound)));
    }
    return p;
}

inline Polynomial<Rational> random_nonzero_poly(Rng& rng, unsigned num_vars, unsigned max_deg,
                                                long long bound) {
    while (true) {
        Polynomial<Rational> p = random_poly(rng, num_vars, max_deg, bound);
        if (!p.is_zero()) return p;
    }
}

}  // namespace kaehler::testing
