#include "logbps/polynomial.hpp"

#include <stdexcept>

#include "logbps/combinatorics.hpp"

namespace logbps {

namespace {

void strip_trailing_zeros(std::vector<Rational>& c)
{
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    strip_trailing_zeros(coeffs_);
}

Polynomial Polynomial::constant(Rational c)
{
    return Polynomial(std::vector<Rational>{std::move(c)});
}

Polynomial Polynomial::monomial(Rational c, int exponent)
{
    if (exponent < 0) throw std::domain_error("Polynomial: negative exponent");
    std::vector<Rational> coeffs(static_cast<std::size_t>(exponent) + 1);
    coeffs.back() = std::move(c);
    return Polynomial(std::move(coeffs));
}

Rational Polynomial::coeff(int exponent) const
{
    if (exponent < 0 || exponent > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(exponent)];
}

bool Polynomial::is_homogeneous_of_degree(int k) const
{
    for (int e = 0; e <= degree(); ++e)
        if (e != k && !coeffs_[static_cast<std::size_t>(e)].is_zero()) return false;
    return true;
}

Polynomial Polynomial::operator-() const
{
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
    }
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p)
{
    std::vector<Rational> out(p.coeffs_.size());
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = c * p.coeffs_[i];
    return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string Polynomial::str(std::string_view var) const
{
    if (is_zero()) return "0";
    std::string out;
    for (int e = degree(); e >= 0; --e) {
        const Rational c = coeff(e);
        if (c.is_zero()) continue;
        const Rational mag = c.is_negative() ? -c : c;
        if (out.empty()) {
            if (c.is_negative()) out += "-";
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        const bool unit = mag == Rational(1);
        if (e == 0 || !unit) out += mag.str();
        if (e > 0) {
            if (!unit) out += "*";
            out += var;
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

Polynomial poly_binomial_in_s(int d)
{
    if (d <= 0) throw std::domain_error("poly_binomial_in_s: d must be positive");
    Polynomial p = Polynomial::constant(Rational(1));
    for (int j = 1; j <= d - 1; ++j) {
        // factor (d*s - d - j)
        Polynomial factor(std::vector<Rational>{Rational(-(d + j)), Rational(d)});
        p = p * factor;
    }
    const Rational scale = Rational(1, Integer(d) * d * factorial(d - 1));
    return scale * p;
}

}  // namespace logbps
