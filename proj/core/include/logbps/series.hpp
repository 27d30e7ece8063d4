#pragma once

#include <string>
#include <vector>

#include "logbps/rational.hpp"

namespace logbps {

/// Truncated formal power series in h with even powers only. coeff(k) is the
/// coefficient of h^{2k}; order() is an even exclusive bound on the retained
/// powers, so order/2 coefficients are kept. Every series in this library
/// (the sinc factor, genus expansions, cosines) is even in h, which is why
/// odd powers are not represented at all.
class EvenSeries {
public:
    /// coeffs[k] multiplies h^{2k}; missing entries are zero-filled and extra
    /// entries beyond order/2 are rejected.
    EvenSeries(std::vector<Rational> coeffs, int order);

    static EvenSeries zero(int order);

    int order() const { return order_; }
    int term_count() const { return static_cast<int>(coeffs_.size()); }
    const Rational& coeff(int k) const;

    /// Truncating arithmetic: the result order is the min of the operands'.
    friend EvenSeries operator+(const EvenSeries& a, const EvenSeries& b);
    friend EvenSeries operator*(const EvenSeries& a, const EvenSeries& b);
    friend EvenSeries operator*(const Rational& c, const EvenSeries& s);

    bool operator==(const EvenSeries&) const = default;

private:
    std::vector<Rational> coeffs_;  // size order_/2
    int order_;
};

/// Laurent polynomial in q invariant under q -> 1/q by construction:
/// c0 + sum_{j>=1} c_j (q^j + q^{-j}). Trailing zero pair coefficients are
/// stripped, so span() is the largest exponent with a nonzero coefficient.
class SymmetricLaurent {
public:
    SymmetricLaurent() : c0_(0) {}
    SymmetricLaurent(Rational c0, std::vector<Rational> pair_coeffs);

    static SymmetricLaurent constant(Rational c0);

    int span() const { return static_cast<int>(pairs_.size()); }
    const Rational& constant_term() const { return c0_; }
    /// Common coefficient of q^j and q^{-j}, j >= 1.
    Rational pair_coeff(int j) const;

    /// Evaluation at q = 1: c0 + 2 * sum of pair coefficients.
    Rational value_at_one() const;

    bool all_integer() const;
    bool is_zero() const;

    /// e.g. "2*q^2 + 3*q + 1 + 3*q^-1 + 2*q^-2" (descending exponents).
    std::string str() const;

    bool operator==(const SymmetricLaurent&) const = default;

private:
    Rational c0_;
    std::vector<Rational> pairs_;  // pairs_[j-1] multiplies q^j + q^{-j}
};

/// Taylor coefficients of sin(h/2)/(h/2): coeff of h^{2k} is
/// (-1)^k / (4^k (2k+1)!). order must be even and >= 2.
EvenSeries sinc_half_series(int order);

/// Substitutes q = e^{i*lambda*h}, so q^j + q^{-j} = 2 cos(j*lambda*h), and
/// expands to an even series: coeff of h^{2k} picks up
/// 2 c_j (-1)^k (j*lambda)^{2k} / (2k)! from each pair, plus c0 at k = 0.
/// lambda must be nonzero.
EvenSeries laurent_to_series(const SymmetricLaurent& L, const Rational& lambda, int order);

struct LaurentFit {
    SymmetricLaurent laurent;
    /// True when the retained series coefficients beyond the solved block are
    /// also matched by the fitted cosine sum.
    bool residual_ok = false;
};

/// Solves the exact (span+1) x (span+1) linear system matching the series
/// coefficients of h^0 ... h^{2*span} against c0 + sum_j c_j * 2cos(j*lambda*h).
/// The matrix is Vandermonde in (j*lambda)^2, hence invertible for lambda != 0.
/// Requires series order >= 2*span + 2 (throws std::domain_error otherwise).
LaurentFit fit_laurent(const EvenSeries& series, const Rational& lambda, int span);

}  // namespace logbps
