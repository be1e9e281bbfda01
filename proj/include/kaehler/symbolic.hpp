#pragma once

#include <map>
#include <string>
#include <utility>

#include "kaehler/rational.hpp"

namespace kaehler {

/// Commutative ring of polynomials over Q in string-labeled indeterminates.
/// Used as a coefficient ring when formulas should stay symbolic, e.g. to
/// compute with generic series coefficients a1, a2_10 instead of numbers.
/// Not a field: inverse() is deliberately absent.
class Symbolic {
public:
    using Mono = std::map<std::string, unsigned>;  // label -> exponent, no zeros

    Symbolic() = default;
    Symbolic(long long n) { if (n != 0) terms_[{}] = Rational(n); }  // NOLINT
    Symbolic(const Rational& q) { if (!q.is_zero()) terms_[{}] = q; }  // NOLINT

    static Symbolic one() { return Symbolic(1); }
    static Symbolic var(const std::string& label) {
        Symbolic s;
        s.terms_[{{label, 1}}] = Rational(1);
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Symbolic operator-() const {
        Symbolic r = *this;
        for (auto& [mono, c] : r.terms_) c = -c;
        return r;
    }
    Symbolic& operator+=(const Symbolic& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    Symbolic& operator-=(const Symbolic& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
        return *this;
    }
    Symbolic& operator*=(const Symbolic& o) { *this = *this * o; return *this; }

    friend Symbolic operator+(Symbolic a, const Symbolic& b) { return a += b; }
    friend Symbolic operator-(Symbolic a, const Symbolic& b) { return a -= b; }
    friend Symbolic operator*(const Symbolic& a, const Symbolic& b) {
        Symbolic r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono m = ma;
                for (const auto& [label, e] : mb) m[label] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }

    friend bool operator==(const Symbolic& a, const Symbolic& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Symbolic& a, const Symbolic& b) { return !(a == b); }

    friend Symbolic scaled(const Symbolic& s, const Rational& q) {
        if (q.is_zero()) return Symbolic();
        Symbolic r = s;
        for (auto& [mono, c] : r.terms_) c = c * q;
        return r;
    }

    /// Terms ordered by label-lexicographic monomial order; "2*a1*a2^2 + 1/2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [mono, c] : terms_) {
            std::string piece = piece_string(mono, c);
            if (first) {
                out = piece;
                first = false;
            } else if (!piece.empty() && piece[0] == '-') {
                out += " - " + piece.substr(1);
            } else {
                out += " + " + piece;
            }
        }
        return out;
    }

    const std::map<Mono, Rational>& terms() const { return terms_; }

private:
    void add_term(const Mono& mono, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    static std::string piece_string(const Mono& mono, const Rational& c) {
        std::string vars;
        for (const auto& [label, e] : mono) {
            if (!vars.empty()) vars += "*";
            vars += label;
            if (e != 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) return c.to_string();
        if (c.is_one()) return vars;
        if ((-c).is_one()) return "-" + vars;
        return c.to_string() + "*" + vars;
    }

    std::map<Mono, Rational> terms_;
};

}  // namespace kaehler
