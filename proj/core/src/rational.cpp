#include "logbps/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace logbps {

namespace {

void require_nonzero_den(const Integer& den)
{
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den)
{
    require_nonzero_den(den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::operator-() const
{
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const
{
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(denominator(), numerator());
}

Rational Rational::pow(long e) const
{
    if (e == 0) return Rational(1);
    const Rational base = e > 0 ? *this : inverse();
    const unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                                  : static_cast<unsigned long>(-(e + 1)) + 1;
    return Rational(integer_pow(base.numerator(), n), integer_pow(base.denominator(), n));
}

std::string Rational::str() const
{
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::optional<Rational> Rational::parse(std::string_view text)
{
    const auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    std::string_view num = text;
    std::string_view den = "1";
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool negative = false;
    if (!num.empty() && num.front() == '-') {
        negative = true;
        num.remove_prefix(1);
    }
    if (!is_digits(num) || !is_digits(den)) return std::nullopt;

    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (sgn(d) == 0) return std::nullopt;
    if (negative) n = -n;
    return Rational(n, d);
}

Integer integer_pow(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace logbps
