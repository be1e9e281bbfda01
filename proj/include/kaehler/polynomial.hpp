#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "kaehler/errors.hpp"
#include "kaehler/ring.hpp"

namespace kaehler {

/// Per-slot exponents of one monomial. Length equals the ambient slot count.
using ExponentVector = std::vector<unsigned>;

inline unsigned total_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

inline unsigned weighted_degree(const ExponentVector& e, const std::vector<unsigned>& weights) {
    unsigned d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
    return d;
}

/// Graded lexicographic, higher terms first. Canonical order for storage,
/// equality, and display.
struct GrlexDescending {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        unsigned da = total_degree(a);
        unsigned db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial over a char-0 coefficient ring.
/// Invariants: no stored coefficient is zero; every exponent vector has
/// length num_vars.
template <RingCoeff C>
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, C, GrlexDescending>;

    explicit Polynomial(unsigned num_vars) : nv_(num_vars) {
        if (num_vars == 0) throw ValidationError("polynomial needs at least one variable slot");
    }

    static Polynomial zero(unsigned num_vars) { return Polynomial(num_vars); }
    static Polynomial constant(unsigned num_vars, const C& c) {
        Polynomial p(num_vars);
        p.add_term(ExponentVector(num_vars, 0), c);
        return p;
    }
    static Polynomial variable(unsigned num_vars, unsigned slot) {
        if (slot >= num_vars) throw ValidationError("variable slot out of range");
        Polynomial p(num_vars);
        ExponentVector e(num_vars, 0);
        e[slot] = 1;
        p.add_term(e, C::one());
        return p;
    }
    static Polynomial monomial(unsigned num_vars, const ExponentVector& e, const C& c) {
        Polynomial p(num_vars);
        if (e.size() != num_vars) throw DimensionError("exponent vector length mismatch");
        p.add_term(e, c);
        return p;
    }

    unsigned num_vars() const { return nv_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    C constant_term() const {
        auto it = terms_.find(ExponentVector(nv_, 0));
        return it == terms_.end() ? C() : it->second;
    }

    C coefficient_of(const ExponentVector& e) const {
        if (e.size() != nv_) throw DimensionError("exponent vector length mismatch");
        auto it = terms_.find(e);
        return it == terms_.end() ? C() : it->second;
    }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    bool depends_on(unsigned slot) const {
        for (const auto& [e, c] : terms_)
            if (e[slot] != 0) return true;
        return false;
    }

    void add_term(const ExponentVector& e, const C& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Polynomial operator-() const {
        Polynomial r(nv_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_ring(b);
        Polynomial r(a.nv_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExponentVector e(a.nv_);
                for (unsigned i = 0; i < a.nv_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    Polynomial scale(const C& c) const {
        Polynomial r(nv_);
        for (const auto& [e, k] : terms_) r.add_term(e, k * c);
        return r;
    }
    Polynomial scale_rational(const Rational& q) const {
        Polynomial r(nv_);
        for (const auto& [e, k] : terms_) r.add_term(e, scaled(k, q));
        return r;
    }

    Polynomial pow(unsigned k) const {
        Polynomial r = constant(nv_, C::one());
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1u) r = r * base;
            base = (k >>= 1) ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nv_ == b.nv_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Iterated formal partial derivative, order[i] times in slot i.
    Polynomial partial_derivative(const ExponentVector& order) const {
        if (order.size() != nv_) throw DimensionError("derivative order length mismatch");
        Polynomial r(nv_);
        for (const auto& [e, c] : terms_) {
            ExponentVector ne = e;
            Rational mult(1);
            bool vanishes = false;
            for (unsigned i = 0; i < nv_ && !vanishes; ++i) {
                for (unsigned k = 0; k < order[i]; ++k) {
                    if (ne[i] == 0) { vanishes = true; break; }
                    mult *= Rational(static_cast<long long>(ne[i]));
                    --ne[i];
                }
            }
            if (!vanishes) r.add_term(ne, scaled(c, mult));
        }
        return r;
    }

    /// Exact composition p(images[0], ..., images[nv-1]). All images must
    /// share one ambient ring; the result lives there.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != nv_) throw DimensionError("substitution needs one image per variable");
        unsigned target = images.front().num_vars();
        for (const auto& im : images)
            if (im.num_vars() != target) throw DimensionError("images live in different rings");
        Polynomial r(target);
        for (const auto& [e, c] : terms_) {
            Polynomial prod = constant(target, c);
            for (unsigned i = 0; i < nv_; ++i)
                if (e[i] != 0) prod = prod * images[i].pow(e[i]);
            r += prod;
        }
        return r;
    }

    /// Drops terms of total degree > bound, or weighted degree when per-slot
    /// weights are supplied.
    Polynomial truncate_total_degree(unsigned bound,
                                     const std::optional<std::vector<unsigned>>& weights = {}) const {
        if (weights && weights->size() != nv_) throw DimensionError("weight vector length mismatch");
        Polynomial r(nv_);
        for (const auto& [e, c] : terms_) {
            unsigned d = weights ? weighted_degree(e, *weights) : total_degree(e);
            if (d <= bound) r.terms_.emplace(e, c);
        }
        return r;
    }

    /// Keeps only terms of exact (weighted) total degree d.
    Polynomial homogeneous_part(unsigned d,
                                const std::optional<std::vector<unsigned>>& weights = {}) const {
        Polynomial r(nv_);
        for (const auto& [e, c] : terms_) {
            unsigned td = weights ? weighted_degree(e, *weights) : total_degree(e);
            if (td == d) r.terms_.emplace(e, c);
        }
        return r;
    }

    /// Moves slot i to slot_map[i] in a ring with target_vars slots. Every
    /// slot actually used must be mapped in range.
    Polynomial with_slots(unsigned target_vars, const std::vector<unsigned>& slot_map) const {
        if (slot_map.size() != nv_) throw DimensionError("slot map length mismatch");
        for (unsigned s : slot_map)
            if (s >= target_vars) throw DimensionError("slot map target out of range");
        Polynomial r(target_vars);
        for (const auto& [e, c] : terms_) {
            ExponentVector ne(target_vars, 0);
            for (unsigned i = 0; i < nv_; ++i) {
                if (e[i] == 0) continue;
                ne[slot_map[i]] += e[i];
            }
            r.add_term(ne, c);
        }
        return r;
    }

    /// Same polynomial in a ring with extra trailing slots.
    Polynomial embedded(unsigned target_vars) const {
        if (target_vars < nv_) throw DimensionError("embedding cannot drop slots");
        std::vector<unsigned> id(nv_);
        for (unsigned i = 0; i < nv_; ++i) id[i] = i;
        return with_slots(target_vars, id);
    }

private:
    void check_same_ring(const Polynomial& o) const {
        if (nv_ != o.nv_) throw DimensionError("polynomials live in different rings");
    }

    unsigned nv_;
    TermMap terms_;
};

/// All exponent vectors of the given length with total degree exactly d,
/// in lexicographic descending order.
inline void exponents_of_degree(unsigned length, unsigned d, std::vector<ExponentVector>& out) {
    ExponentVector cur(length, 0);
    auto rec = [&](auto&& self, unsigned slot, unsigned rem) -> void {
        if (slot + 1 == length) {
            cur[slot] = rem;
            out.push_back(cur);
            return;
        }
        for (unsigned k = rem + 1; k-- > 0;) {
            cur[slot] = k;
            self(self, slot + 1, rem - k);
        }
        cur[slot] = 0;
    };
    if (length == 0) {
        if (d == 0) out.push_back({});
        return;
    }
    rec(rec, 0, d);
}

}  // namespace kaehler
