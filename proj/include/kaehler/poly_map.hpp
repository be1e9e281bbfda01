#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kaehler/errors.hpp"
#include "kaehler/linalg.hpp"
#include "kaehler/polynomial.hpp"

namespace kaehler {

/// Polynomial self-map of affine n-space: n components in n variables.
template <RingCoeff C>
struct PolyEndo {
    unsigned n;
    std::vector<Polynomial<C>> components;

    PolyEndo(unsigned n_, std::vector<Polynomial<C>> comps) : n(n_), components(std::move(comps)) {
        if (n == 0) throw ValidationError("endomorphism needs n >= 1");
        if (components.size() != n) throw DimensionError("component count must equal n");
        for (const auto& c : components)
            if (c.num_vars() != n) throw DimensionError("component lives in the wrong ring");
    }

    static PolyEndo identity(unsigned n) {
        std::vector<Polynomial<C>> comps;
        for (unsigned i = 0; i < n; ++i) comps.push_back(Polynomial<C>::variable(n, i));
        return PolyEndo(n, std::move(comps));
    }

    bool is_identity() const {
        for (unsigned i = 0; i < n; ++i)
            if (components[i] != Polynomial<C>::variable(n, i)) return false;
        return true;
    }

    friend bool operator==(const PolyEndo& a, const PolyEndo& b) {
        return a.n == b.n && a.components == b.components;
    }
    friend bool operator!=(const PolyEndo& a, const PolyEndo& b) { return !(a == b); }
};

/// Group law: component i of the result is f_i(g_1, ..., g_n).
template <RingCoeff C>
PolyEndo<C> compose_poly(const PolyEndo<C>& f, const PolyEndo<C>& g) {
    if (f.n != g.n) throw DimensionError("composition needs matching variable counts");
    std::vector<Polynomial<C>> comps;
    for (unsigned i = 0; i < f.n; ++i) comps.push_back(f.components[i].substitute(g.components));
    return PolyEndo<C>(f.n, std::move(comps));
}

/// Endomorphism with a verified two-sided inverse. The inverse is optional:
/// maps known to be automorphisms on structural grounds can be wrapped
/// without one.
template <RingCoeff C>
class PolyAutomorphism {
public:
    explicit PolyAutomorphism(PolyEndo<C> forward) : fwd_(std::move(forward)) {}

    PolyAutomorphism(PolyEndo<C> forward, PolyEndo<C> inverse)
        : fwd_(std::move(forward)), inv_(std::move(inverse)) {
        if (!compose_poly(fwd_, *inv_).is_identity() || !compose_poly(*inv_, fwd_).is_identity())
            throw StructureError("claimed inverse does not compose to the identity");
    }

    static PolyAutomorphism identity(unsigned n) {
        return PolyAutomorphism(PolyEndo<C>::identity(n), PolyEndo<C>::identity(n));
    }

    const PolyEndo<C>& forward() const { return fwd_; }
    bool has_inverse() const { return inv_.has_value(); }
    const PolyEndo<C>& inverse() const {
        if (!inv_) throw NotInvertibleError("no inverse attached");
        return *inv_;
    }

    friend PolyAutomorphism compose_auto(const PolyAutomorphism& f, const PolyAutomorphism& g) {
        PolyEndo<C> fwd = compose_poly(f.fwd_, g.fwd_);
        if (f.inv_ && g.inv_)
            return PolyAutomorphism(std::move(fwd), compose_poly(*g.inv_, *f.inv_));
        return PolyAutomorphism(std::move(fwd));
    }

    friend bool operator==(const PolyAutomorphism& a, const PolyAutomorphism& b) {
        return a.fwd_ == b.fwd_;
    }

private:
    PolyEndo<C> fwd_;
    std::optional<PolyEndo<C>> inv_;
};

/// True iff, with variables grouped into consecutive blocks of size m, the
/// components of block s only use variables from blocks 1..s.
template <RingCoeff C>
bool is_block_triangular(const PolyEndo<C>& f, unsigned block_size) {
    if (block_size == 0 || f.n % block_size != 0)
        throw DimensionError("variable count must be a positive multiple of the block size");
    unsigned blocks = f.n / block_size;
    for (unsigned s = 0; s < blocks; ++s) {
        unsigned allowed = (s + 1) * block_size;
        for (unsigned r = 0; r < block_size; ++r)
            for (unsigned v = allowed; v < f.n; ++v)
                if (f.components[s * block_size + r].depends_on(v)) return false;
    }
    return true;
}

/// True iff component i uses only variables 1..i.
template <RingCoeff C>
bool is_triangular(const PolyEndo<C>& f) {
    for (unsigned i = 0; i < f.n; ++i)
        for (unsigned v = i + 1; v < f.n; ++v)
            if (f.components[i].depends_on(v)) return false;
    return true;
}

/// True iff exactly one component differs from the identity and the
/// difference does not involve that component's own variable.
template <RingCoeff C>
bool is_elementary(const PolyEndo<C>& f) {
    std::optional<unsigned> off;
    for (unsigned i = 0; i < f.n; ++i) {
        if (f.components[i] == Polynomial<C>::variable(f.n, i)) continue;
        if (off) return false;
        off = i;
    }
    if (!off) return false;
    Polynomial<C> diff = f.components[*off] - Polynomial<C>::variable(f.n, *off);
    return !diff.depends_on(*off);
}

template <RingCoeff C>
bool is_linear(const PolyEndo<C>& f) {
    for (const auto& c : f.components)
        if (c.degree() > 1 || !c.constant_term().is_zero()) return false;
    return true;
}

/// Entry (i, j) is the formal partial of component i in slot j.
template <RingCoeff C>
std::vector<std::vector<Polynomial<C>>> jacobian_matrix(const PolyEndo<C>& f) {
    std::vector<std::vector<Polynomial<C>>> jac(f.n);
    for (unsigned i = 0; i < f.n; ++i)
        for (unsigned j = 0; j < f.n; ++j) {
            ExponentVector order(f.n, 0);
            order[j] = 1;
            jac[i].push_back(f.components[i].partial_derivative(order));
        }
    return jac;
}

namespace detail {

template <RingCoeff C>
Polynomial<C> poly_det(const std::vector<std::vector<Polynomial<C>>>& a, unsigned row,
                       std::vector<unsigned>& cols, unsigned nv) {
    if (cols.size() == 1) return a[row][cols[0]];
    Polynomial<C> s(nv);
    for (unsigned k = 0; k < cols.size(); ++k) {
        if (a[row][cols[k]].is_zero()) continue;
        unsigned col = cols[k];
        cols.erase(cols.begin() + k);
        Polynomial<C> minor = poly_det(a, row + 1, cols, nv);
        cols.insert(cols.begin() + k, col);
        Polynomial<C> contrib = a[row][col] * minor;
        if (k % 2 == 0) s += contrib; else s -= contrib;
    }
    return s;
}

}  // namespace detail

template <RingCoeff C>
Polynomial<C> jacobian_determinant(const PolyEndo<C>& f) {
    auto jac = jacobian_matrix(f);
    std::vector<unsigned> cols(f.n);
    for (unsigned j = 0; j < f.n; ++j) cols[j] = j;
    return detail::poly_det(jac, 0, cols, f.n);
}

namespace detail {

/// Splits one block row as A_s * Y_s + R_s where A_s collects the terms that
/// are a bare block-s variable and R_s is everything else.
template <FieldCoeff C>
void split_block(const PolyEndo<C>& f, unsigned block_size, unsigned s, Matrix<C>& a,
                 std::vector<Polynomial<C>>& rest) {
    unsigned base = s * block_size;
    for (unsigned r = 0; r < block_size; ++r) {
        const Polynomial<C>& comp = f.components[base + r];
        Polynomial<C> others(f.n);
        for (const auto& [e, c] : comp.terms()) {
            bool bare = false;
            if (total_degree(e) == 1) {
                for (unsigned cidx = 0; cidx < block_size; ++cidx)
                    if (e[base + cidx] == 1) {
                        a.at(r, cidx) = c;
                        bare = true;
                        break;
                    }
            }
            if (!bare) others.add_term(e, c);
        }
        rest[r] = others;
    }
}

}  // namespace detail

/// Inverse of a block-triangular map whose diagonal blocks are constant
/// invertible matrices: invert the first block linearly, then back-substitute
/// block by block. The result is verified by composition; anything the
/// back-substitution cannot represent (block-s variables inside the remainder
/// of block s) fails that check and throws.
template <FieldCoeff C>
PolyAutomorphism<C> invert_block_triangular(const PolyEndo<C>& f, unsigned block_size) {
    if (!is_block_triangular(f, block_size))
        throw NotInvertibleError("map is not block triangular for this block size");
    unsigned blocks = f.n / block_size;

    std::vector<Polynomial<C>> inv;
    for (unsigned i = 0; i < f.n; ++i) inv.push_back(Polynomial<C>::zero(f.n));

    for (unsigned s = 0; s < blocks; ++s) {
        Matrix<C> a(block_size);
        std::vector<Polynomial<C>> rest(block_size, Polynomial<C>::zero(f.n));
        detail::split_block(f, block_size, s, a, rest);
        Matrix<C> ainv = [&] {
            try {
                return a.inverse();
            } catch (const NotInvertibleError&) {
                throw NotInvertibleError("diagonal block " + std::to_string(s + 1) + " is singular");
            }
        }();

        // G_s = A_s^-1 (Y_s - R_s(G_1..G_{s-1})): R_s only uses earlier
        // blocks, whose inverse components are already known.
        std::vector<Polynomial<C>> lower = inv;
        unsigned base = s * block_size;
        for (unsigned v = base; v < f.n; ++v) lower[v] = Polynomial<C>::variable(f.n, v);
        for (unsigned r = 0; r < block_size; ++r) {
            Polynomial<C> rhs = Polynomial<C>::variable(f.n, base + r) - rest[r].substitute(lower);
            for (unsigned c = 0; c < block_size; ++c)
                inv[base + c] += rhs.scale(ainv.at(c, r));
        }
    }

    PolyEndo<C> g(f.n, std::move(inv));
    if (!compose_poly(f, g).is_identity() || !compose_poly(g, f).is_identity())
        throw NotInvertibleError("block back-substitution failed; diagonal blocks are not constant linear");
    return PolyAutomorphism<C>(f, g);
}

}  // namespace kaehler
