#include "logbps/localization.hpp"

#include <numeric>
#include <stdexcept>

namespace logbps {

namespace {

void check_degree(int d)
{
    if (d <= 0) throw std::domain_error("localization: d must be positive");
}

}  // namespace

std::vector<Rational> obstruction_weights(int d, long m)
{
    check_degree(d);
    std::vector<Rational> w;
    w.reserve(static_cast<std::size_t>(d - 1));
    for (int j = 1; j <= d - 1; ++j) w.push_back(-(Rational(j, d) + Rational(m)));
    return w;
}

Rational ob_weight_product(int d, long m)
{
    check_degree(d);
    Integer num = 1;
    for (int j = 1; j <= d - 1; ++j) num *= Integer(j) + Integer(m) * d;
    if (d % 2 == 0) num = -num;  // (-1)^{d-1}
    return Rational(num, integer_pow(d, static_cast<unsigned long>(d - 1)));
}

Rational def_contribution(int d)
{
    check_degree(d);
    return Rational(factorial(d), integer_pow(d, static_cast<unsigned long>(d - 1)));
}

Rational galois_cover_contribution(int d, long m)
{
    check_degree(d);
    return Rational(1, d) * ob_weight_product(d, m) / def_contribution(d);
}

Rational genus0_psi_integral(const std::vector<int>& exponents)
{
    const int n = static_cast<int>(exponents.size());
    if (n < 3) throw std::domain_error("genus0_psi_integral: need at least 3 marked points");
    int total = 0;
    for (int a : exponents) {
        if (a < 0) throw std::domain_error("genus0_psi_integral: exponents must be non-negative");
        total += a;
    }
    if (total != n - 3) return Rational(0);
    // sum(a_i) = n-3, so (n-3)! / prod(a_i!) is exactly the multinomial.
    return Rational(multinomial(exponents));
}

Polynomial relative_psi_integral(const Partition& p)
{
    const int k = p.count();
    if (k < 2) throw std::domain_error("relative_psi_integral: partition needs k >= 2 parts");
    const int d = p.sum();
    // The relative psi-class is (d*s) times the domain cotangent class at the
    // fully ramified point, and int_{M_{0,k+1}} psi^{k-2} = 1.
    std::vector<int> exponents(static_cast<std::size_t>(k), 0);
    exponents.push_back(k - 2);
    const Rational base = genus0_psi_integral(exponents);
    return Polynomial::monomial(
        base * Rational(integer_pow(d, static_cast<unsigned long>(k - 2))), k - 2);
}

namespace {

// d_i * (m = 1 Galois contribution) = ((-1)^{d_i-1}/d_i) binom(2 d_i - 1, d_i - 1).
Rational per_part_factor(int di)
{
    Rational f(gen_binomial(2L * di - 1, di - 1), Integer(di));
    return di % 2 == 0 ? -f : f;
}

}  // namespace

Polynomial partition_contribution(const Partition& p)
{
    const int k = p.count();
    if (k < 2) throw std::domain_error("partition_contribution: partition needs k >= 2 parts");
    Rational product(1);
    for (int di : p.parts) product *= per_part_factor(di);
    const Rational prefactor = product / Rational(aut_order(p));
    return Polynomial::monomial(prefactor, 1) * relative_psi_integral(p);
}

LocalizationReport mc_localization(int d)
{
    check_degree(d);
    LocalizationReport report;
    report.d = d;
    for (const Partition& p : partitions_of(d)) {
        Polynomial term = p.count() == 1
                              ? Polynomial::constant(galois_cover_contribution(d, 1))
                              : partition_contribution(p);
        report.total = report.total + term;
        report.terms.emplace_back(p, std::move(term));
    }
    report.closed_form = poly_binomial_in_s(d);
    report.match = report.total == report.closed_form;
    return report;
}

std::vector<DegreeTermEntry> degree_term_decomposition(int d)
{
    check_degree(d);
    std::vector<DegreeTermEntry> out(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) out[static_cast<std::size_t>(k)].k = k;
    const LocalizationReport report = mc_localization(d);
    for (const auto& [p, term] : report.terms) {
        auto& slot = out[static_cast<std::size_t>(p.count() - 1)].term;
        slot = slot + term;
    }
    for (auto& entry : out) {
        entry.homogeneous = entry.term.is_homogeneous_of_degree(entry.k);
        entry.matches_closed_form =
            entry.term ==
            Polynomial::monomial(report.closed_form.coeff(entry.k), entry.k);
    }
    return out;
}

}  // namespace logbps
