#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "kaehler/errors.hpp"

namespace kaehler {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar over arbitrary-precision integers.
/// Always kept in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw ZeroDivisionError("rational with zero denominator");
        // The backend requires a positive denominator.
        if (den < 0)
            v_ = boost::multiprecision::cpp_rational(-num, -den);
        else
            v_ = boost::multiprecision::cpp_rational(num, den);
    }

    static Rational one() { return Rational(1); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return boost::multiprecision::denominator(v_) == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDivisionError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw ZeroDivisionError("inverse of zero");
        return Rational(denominator(), numerator());
    }

    /// "p/q", with "/q" omitted when the denominator is 1.
    std::string to_string() const {
        std::ostringstream os;
        os << v_;
        return os.str();
    }

    /// Parses "p" or "p/q" with optional leading sign. Throws ValidationError.
    static Rational from_string(const std::string& s) {
        auto bad = [&] { throw ValidationError("invalid rational literal: '" + s + "'"); };
        if (s.empty()) bad();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Integer(s));
            Integer num(s.substr(0, slash));
            Integer den(s.substr(slash + 1));
            return Rational(num, den);
        } catch (const std::runtime_error&) {
            bad();
        }
        return Rational();  // unreachable
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline Rational scaled(const Rational& c, const Rational& q) { return c * q; }

inline Rational factorial(unsigned n) {
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return Rational(r);
}

}  // namespace kaehler
