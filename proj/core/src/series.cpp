#include "logbps/series.hpp"

#include <stdexcept>

#include "logbps/combinatorics.hpp"

namespace logbps {

namespace {

void check_order(int order)
{
    if (order < 2 || order % 2 != 0)
        throw std::domain_error("EvenSeries: order must be a positive even integer");
}

}  // namespace

EvenSeries::EvenSeries(std::vector<Rational> coeffs, int order)
    : coeffs_(std::move(coeffs)), order_(order)
{
    check_order(order_);
    const std::size_t n = static_cast<std::size_t>(order_ / 2);
    if (coeffs_.size() > n)
        throw std::domain_error("EvenSeries: more coefficients than the order retains");
    coeffs_.resize(n);
}

EvenSeries EvenSeries::zero(int order)
{
    return EvenSeries({}, order);
}

const Rational& EvenSeries::coeff(int k) const
{
    if (k < 0 || k >= term_count())
        throw std::out_of_range("EvenSeries: coefficient index outside truncation");
    return coeffs_[static_cast<std::size_t>(k)];
}

EvenSeries operator+(const EvenSeries& a, const EvenSeries& b)
{
    const int order = std::min(a.order_, b.order_);
    std::vector<Rational> out(static_cast<std::size_t>(order / 2));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeffs_[k] + b.coeffs_[k];
    return EvenSeries(std::move(out), order);
}

EvenSeries operator*(const EvenSeries& a, const EvenSeries& b)
{
    const int order = std::min(a.order_, b.order_);
    std::vector<Rational> out(static_cast<std::size_t>(order / 2));
    for (std::size_t k = 0; k < out.size(); ++k)
        for (std::size_t i = 0; i <= k; ++i) out[k] += a.coeffs_[i] * b.coeffs_[k - i];
    return EvenSeries(std::move(out), order);
}

EvenSeries operator*(const Rational& c, const EvenSeries& s)
{
    std::vector<Rational> out(s.coeffs_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = c * s.coeffs_[k];
    return EvenSeries(std::move(out), s.order_);
}

SymmetricLaurent::SymmetricLaurent(Rational c0, std::vector<Rational> pair_coeffs)
    : c0_(std::move(c0)), pairs_(std::move(pair_coeffs))
{
    while (!pairs_.empty() && pairs_.back().is_zero()) pairs_.pop_back();
}

SymmetricLaurent SymmetricLaurent::constant(Rational c0)
{
    return SymmetricLaurent(std::move(c0), {});
}

Rational SymmetricLaurent::pair_coeff(int j) const
{
    if (j < 1 || j > span()) return Rational(0);
    return pairs_[static_cast<std::size_t>(j - 1)];
}

Rational SymmetricLaurent::value_at_one() const
{
    Rational v = c0_;
    for (const Rational& c : pairs_) v += Rational(2) * c;
    return v;
}

bool SymmetricLaurent::all_integer() const
{
    if (!c0_.is_integer()) return false;
    for (const Rational& c : pairs_)
        if (!c.is_integer()) return false;
    return true;
}

bool SymmetricLaurent::is_zero() const
{
    return c0_.is_zero() && pairs_.empty();
}

std::string SymmetricLaurent::str() const
{
    if (is_zero()) return "0";
    std::string out;
    const auto append = [&out](const Rational& c, int e) {
        if (c.is_zero()) return;
        const Rational mag = c.is_negative() ? -c : c;
        if (out.empty()) {
            if (c.is_negative()) out += "-";
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        const bool unit = mag == Rational(1);
        if (e == 0 || !unit) out += mag.str();
        if (e != 0) {
            if (!unit) out += "*";
            out += "q";
            if (e != 1) out += "^" + std::to_string(e);
        }
    };
    for (int j = span(); j >= 1; --j) append(pair_coeff(j), j);
    append(c0_, 0);
    for (int j = 1; j <= span(); ++j) append(pair_coeff(j), -j);
    return out;
}

EvenSeries sinc_half_series(int order)
{
    check_order(order);
    std::vector<Rational> coeffs(static_cast<std::size_t>(order / 2));
    for (int k = 0; k < order / 2; ++k) {
        const Integer denom = integer_pow(4, static_cast<unsigned long>(k)) * factorial(2 * k + 1);
        coeffs[static_cast<std::size_t>(k)] = Rational(k % 2 == 0 ? 1 : -1, denom);
    }
    return EvenSeries(std::move(coeffs), order);
}

namespace {

// 2 cos(j*lambda*h) as an even series coefficient at h^{2k}:
// 2 (-1)^k (j*lambda)^{2k} / (2k)!.
Rational cosine_coeff(int j, const Rational& lambda, int k)
{
    const Rational x2 = (Rational(j) * lambda).pow(2);
    const Rational sign(k % 2 == 0 ? 1 : -1);
    return Rational(2) * sign * x2.pow(k) / Rational(factorial(2 * k));
}

}  // namespace

EvenSeries laurent_to_series(const SymmetricLaurent& L, const Rational& lambda, int order)
{
    check_order(order);
    if (lambda.is_zero()) throw std::domain_error("laurent_to_series: lambda must be nonzero");
    std::vector<Rational> coeffs(static_cast<std::size_t>(order / 2));
    coeffs[0] = L.constant_term();
    for (int j = 1; j <= L.span(); ++j) {
        const Rational c = L.pair_coeff(j);
        if (c.is_zero()) continue;
        for (int k = 0; k < order / 2; ++k)
            coeffs[static_cast<std::size_t>(k)] += c * cosine_coeff(j, lambda, k);
    }
    return EvenSeries(std::move(coeffs), order);
}

namespace {

// Exact Gaussian elimination with partial (first nonzero) pivoting. The
// systems here are tiny (span <= ~16), so nothing fancier is warranted.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m,
                                   std::vector<Rational> rhs)
{
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("solve_linear: singular matrix");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            const Rational f = m[row][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[row][c] -= f * m[col][c];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

}  // namespace

LaurentFit fit_laurent(const EvenSeries& series, const Rational& lambda, int span)
{
    if (span < 0) throw std::domain_error("fit_laurent: span must be non-negative");
    if (lambda.is_zero()) throw std::domain_error("fit_laurent: lambda must be nonzero");
    if (series.order() < 2 * span + 2)
        throw std::domain_error("fit_laurent: series order too small for requested span");

    const std::size_t n = static_cast<std::size_t>(span) + 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (std::size_t k = 0; k < n; ++k) {
        m[k][0] = Rational(k == 0 ? 1 : 0);  // c0 contributes to h^0 only
        for (std::size_t j = 1; j < n; ++j)
            m[k][j] = cosine_coeff(static_cast<int>(j), lambda, static_cast<int>(k));
        rhs[k] = series.coeff(static_cast<int>(k));
    }
    std::vector<Rational> x = solve_linear(std::move(m), std::move(rhs));

    LaurentFit fit;
    fit.laurent = SymmetricLaurent(x[0], std::vector<Rational>(x.begin() + 1, x.end()));
    fit.residual_ok = true;
    for (int k = span + 1; k < series.term_count(); ++k) {
        Rational predicted(k == 0 ? x[0] : Rational(0));
        for (int j = 1; j <= span; ++j)
            predicted += fit.laurent.pair_coeff(j) * cosine_coeff(j, lambda, k);
        if (predicted != series.coeff(k)) {
            fit.residual_ok = false;
            break;
        }
    }
    return fit;
}

}  // namespace logbps
