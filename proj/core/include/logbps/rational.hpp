#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace logbps {

using Integer = mpz_class;

/// Exact rational scalar, the universal number type of this library.
///
/// Invariants: always stored in lowest terms with a positive denominator;
/// arithmetic is exact and closed under +, -, *, and / by nonzero.
/// There is deliberately no conversion to or from floating point.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    const Integer numerator() const { return v_.get_num(); }
    const Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative() const { return sgn(v_) < 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    /// Reciprocal; throws std::domain_error on zero.
    Rational inverse() const;

    /// Integer power; negative exponents invert (throws on 0^negative).
    Rational pow(long e) const;

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    /// Parses the str() format: optional leading '-', decimal digits, and an
    /// optional "/q" with q a positive integer. Returns nullopt on anything
    /// else (whitespace, zero denominator, empty input, ...).
    static std::optional<Rational> parse(std::string_view text);

private:
    mpq_class v_;  // canonical at all times
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// base^e for integers, e >= 0.
Integer integer_pow(const Integer& base, unsigned long e);

}  // namespace logbps
