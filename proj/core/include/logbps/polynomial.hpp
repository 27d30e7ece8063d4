#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "logbps/rational.hpp"

namespace logbps {

/// Dense univariate polynomial over Rational in a formal variable (the
/// tangency order s, unless stated otherwise). Coefficients are stored
/// ascending by exponent with trailing zeros stripped, so equality is
/// coefficient-wise vector equality. degree() of the zero polynomial is -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(Rational c);
    static Polynomial monomial(Rational c, int exponent);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int exponent) const;

    /// True when every nonzero coefficient sits at the given exponent.
    bool is_homogeneous_of_degree(int k) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    Rational eval(const Rational& x) const;  // Horner, exact

    /// Human-readable form, descending powers, e.g. "1/2*s^2 - 3/2*s + 10/9".
    std::string str(std::string_view var = "s") const;

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<Rational> coeffs_;  // ascending, canonical
};

/// The multiple-cover coefficient as a polynomial in the tangency symbol:
/// (1/d^2) * binom(d(s-1)-1, d-1) expanded symbolically, i.e.
/// (1/d^2) * (1/(d-1)!) * prod_{j=1}^{d-1} (d*s - d - j). Degree d-1.
Polynomial poly_binomial_in_s(int d);

}  // namespace logbps
