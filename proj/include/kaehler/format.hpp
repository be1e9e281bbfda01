#pragma once

#include <string>

#include "kaehler/names.hpp"
#include "kaehler/polynomial.hpp"

namespace kaehler {

namespace detail {

inline bool needs_parens(const std::string& cs) {
    return cs.find(' ') != std::string::npos;
}

inline std::string latex_coefficient(const std::string& cs) {
    auto slash = cs.find('/');
    if (slash == std::string::npos) return cs;
    std::string num = cs.substr(0, slash);
    std::string den = cs.substr(slash + 1);
    std::string sign;
    if (!num.empty() && num[0] == '-') {
        sign = "-";
        num = num.substr(1);
    }
    return sign + "\\frac{" + num + "}{" + den + "}";
}

}  // namespace detail

/// Canonical rendering, highest terms first. Plain output is re-parseable:
/// "2*x1^2*x2 + 1/2*x3 - x1". Multi-term coefficients are parenthesized.
template <RingCoeff C>
std::string render(const Polynomial<C>& p, const NameScheme& scheme, Format fmt = Format::Plain) {
    if (p.is_zero()) return "0";
    bool latex = fmt == Format::Latex;

    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string vars;
        for (unsigned slot = 0; slot < e.size(); ++slot) {
            if (e[slot] == 0) continue;
            if (!vars.empty()) vars += latex ? "\\cdot " : "*";
            vars += scheme.slot_name(slot, fmt);
            if (e[slot] != 1)
                vars += latex ? "^{" + std::to_string(e[slot]) + "}" : "^" + std::to_string(e[slot]);
        }

        std::string cs = c.to_string();
        std::string piece;
        if (vars.empty()) {
            if (detail::needs_parens(cs))
                piece = "(" + cs + ")";
            else
                piece = latex ? detail::latex_coefficient(cs) : cs;
        } else if (detail::needs_parens(cs)) {
            piece = "(" + cs + ")" + (latex ? "\\cdot " : "*") + vars;
        } else if (cs == "1") {
            piece = vars;
        } else if (cs == "-1") {
            piece = "-" + vars;
        } else {
            std::string lead = latex ? detail::latex_coefficient(cs) : cs;
            piece = lead + (latex ? "\\cdot " : "*") + vars;
        }

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

}  // namespace kaehler
