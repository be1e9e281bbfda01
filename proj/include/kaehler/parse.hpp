#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "kaehler/errors.hpp"
#include "kaehler/names.hpp"
#include "kaehler/polynomial.hpp"
#include "kaehler/rational.hpp"
#include "kaehler/series.hpp"

namespace kaehler {

struct ExprToken {
    enum Kind { Number, Identifier, Operator, Paren, Caret, End };
    Kind kind;
    std::string lexeme;
    std::size_t position;
};

inline std::vector<ExprToken> tokenize(const std::string& text) {
    std::vector<ExprToken> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({ExprToken::Number, text.substr(start, i - start), start});
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            out.push_back({ExprToken::Identifier, text.substr(start, i - start), start});
        } else if (c == '+' || c == '-' || c == '*' || c == '/') {
            out.push_back({ExprToken::Operator, std::string(1, c), start});
            ++i;
        } else if (c == '(' || c == ')') {
            out.push_back({ExprToken::Paren, std::string(1, c), start});
            ++i;
        } else if (c == '^') {
            out.push_back({ExprToken::Caret, "^", start});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }
    out.push_back({ExprToken::End, "", text.size()});
    return out;
}

namespace detail {

/// Digit strings may carry leading zeros, which the big-integer reader would
/// misread as a base prefix.
inline Integer integer_from_digits(const std::string& digits) {
    std::size_t i = 0;
    while (i + 1 < digits.size() && digits[i] == '0') ++i;
    return Integer(digits.substr(i));
}

/// Recursive descent with precedence ^ > unary minus > * > binary +-.
/// Explicit * is required between factors; '/' only forms rational literals.
class PolyParser {
public:
    PolyParser(std::vector<ExprToken> tokens, const NameScheme& scheme)
        : toks_(std::move(tokens)), scheme_(scheme) {}

    Polynomial<Rational> run() {
        Polynomial<Rational> p = expr();
        if (peek().kind != ExprToken::End)
            throw ParseError("unexpected '" + peek().lexeme + "'", peek().position);
        return p;
    }

private:
    // Exponents above this are rejected outright; expanding them could
    // exhaust memory long before any legitimate use needs them.
    static constexpr unsigned long long kMaxExponent = 1000;
    static constexpr int kMaxDepth = 200;

    const ExprToken& peek() const { return toks_[pos_]; }
    const ExprToken& advance() { return toks_[pos_++]; }
    bool eat(ExprToken::Kind kind, const std::string& lexeme) {
        if (peek().kind != kind || peek().lexeme != lexeme) return false;
        ++pos_;
        return true;
    }

    Polynomial<Rational> expr() {
        DepthGuard guard(this);
        Polynomial<Rational> acc = term();
        while (true) {
            if (eat(ExprToken::Operator, "+"))
                acc += term();
            else if (eat(ExprToken::Operator, "-"))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial<Rational> term() {
        Polynomial<Rational> acc = factor();
        while (eat(ExprToken::Operator, "*")) acc *= factor();
        return acc;
    }

    Polynomial<Rational> factor() {
        DepthGuard guard(this);
        if (eat(ExprToken::Operator, "-")) return -factor();
        return power();
    }

    Polynomial<Rational> power() {
        Polynomial<Rational> base = atom();
        if (peek().kind != ExprToken::Caret) return base;
        std::size_t caret_pos = advance().position;
        if (peek().kind != ExprToken::Number)
            throw ParseError("exponent must be a nonnegative integer literal", peek().position);
        const ExprToken& e = advance();
        Integer big = integer_from_digits(e.lexeme);
        if (big > kMaxExponent) throw ParseError("exponent too large", e.position);
        (void)caret_pos;
        return base.pow(static_cast<unsigned>(big));
    }

    Polynomial<Rational> atom() {
        const ExprToken& t = peek();
        if (t.kind == ExprToken::Number) {
            advance();
            Integer num = integer_from_digits(t.lexeme);
            if (eat(ExprToken::Operator, "/")) {
                if (peek().kind != ExprToken::Number)
                    throw ParseError("denominator must be an integer literal", peek().position);
                const ExprToken& d = advance();
                Integer den = integer_from_digits(d.lexeme);
                if (den == 0) throw ParseError("division by zero", d.position);
                return Polynomial<Rational>::constant(scheme_.num_slots(), Rational(num, den));
            }
            return Polynomial<Rational>::constant(scheme_.num_slots(), Rational(num));
        }
        if (t.kind == ExprToken::Identifier) {
            advance();
            auto slot = scheme_.lookup(t.lexeme);
            if (!slot) throw ParseError("unknown variable '" + t.lexeme + "'", t.position);
            return Polynomial<Rational>::variable(scheme_.num_slots(), *slot);
        }
        if (t.kind == ExprToken::Paren && t.lexeme == "(") {
            advance();
            Polynomial<Rational> inner = expr();
            if (!eat(ExprToken::Paren, ")"))
                throw ParseError("expected ')'", peek().position);
            return inner;
        }
        throw ParseError(t.kind == ExprToken::End ? "unexpected end of input"
                                                  : "unexpected '" + t.lexeme + "'",
                         t.position);
    }

    struct DepthGuard {
        explicit DepthGuard(PolyParser* p) : p_(p) {
            if (++p_->depth_ > kMaxDepth)
                throw ParseError("expression nests too deeply", p_->peek().position);
        }
        ~DepthGuard() { --p_->depth_; }
        PolyParser* p_;
    };

    std::vector<ExprToken> toks_;
    const NameScheme& scheme_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

}  // namespace detail

inline Polynomial<Rational> parse_polynomial(const std::string& text, const NameScheme& scheme) {
    return detail::PolyParser(tokenize(text), scheme).run();
}

/// Parses one expression per component, insists on a zero constant term, and
/// truncates at total degree N. Components that lose terms to the truncation
/// are reported through `warnings` when given.
inline TruncatedSeriesMap<Rational> parse_series_map(const std::vector<std::string>& texts,
                                                     unsigned m, unsigned N,
                                                     std::vector<std::string>* warnings = nullptr) {
    if (texts.size() != m) throw ValidationError("expected one expression per component");
    NameScheme scheme = NameScheme::x_only(m);
    std::vector<Polynomial<Rational>> comps;
    for (unsigned i = 0; i < m; ++i) {
        Polynomial<Rational> p = parse_polynomial(texts[i], scheme);
        if (!p.constant_term().is_zero())
            throw ValidationError("component " + std::to_string(i + 1) + " has a constant term");
        if (warnings && p.truncate_total_degree(N) != p)
            warnings->push_back("component " + std::to_string(i + 1) +
                                " has terms above degree " + std::to_string(N) +
                                "; they were dropped");
        comps.push_back(std::move(p));
    }
    return TruncatedSeriesMap<Rational>(m, N, std::move(comps));
}

}  // namespace kaehler
