#pragma once

#include <concepts>
#include <string>
#include <vector>

#include "kaehler/rational.hpp"

namespace kaehler {

/// Commutative ring with 1 containing an image of the rationals.
/// A default-constructed value is the additive identity.
/// scaled(c, q) is the action of q in Q; found via ADL.
template <typename C>
concept RingCoeff = std::regular<C> && requires(const C& a, const C& b, const Rational& q) {
    { C::one() } -> std::convertible_to<C>;
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { scaled(a, q) } -> std::convertible_to<C>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

template <typename C>
concept FieldCoeff = RingCoeff<C> && requires(const C& a) {
    { a.inverse() } -> std::convertible_to<C>;
};

/// (prod_i (sum_j l[i][j])!) / (prod_ij l[i][j]!) as an exact integer.
/// The quotient is a product of multinomial coefficients, one per row.
inline Integer multinomial_weight(const std::vector<std::vector<unsigned>>& rows) {
    Integer num = 1;
    Integer den = 1;
    for (const auto& row : rows) {
        unsigned sum = 0;
        for (unsigned e : row) {
            sum += e;
            den *= factorial(e).numerator();
        }
        num *= factorial(sum).numerator();
    }
    Integer q = num / den;
    return q;
}

}  // namespace kaehler
