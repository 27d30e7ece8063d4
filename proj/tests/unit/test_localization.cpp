#include <doctest.h>

#include "logbps/localization.hpp"

using namespace logbps;

TEST_CASE("obstruction_weights")
{
    CHECK(obstruction_weights(1, 0).empty());
    CHECK(obstruction_weights(1, 7).empty());
    CHECK(obstruction_weights(2, 1) == std::vector<Rational>{Rational(-3, 2)});
    CHECK(obstruction_weights(3, 0) ==
          std::vector<Rational>{Rational(-1, 3), Rational(-2, 3)});
    CHECK_THROWS_AS(obstruction_weights(0, 1), std::domain_error);
}

TEST_CASE("ob_weight_product closed form equals the literal product")
{
    CHECK(ob_weight_product(1, 5) == Rational(1));
    CHECK(ob_weight_product(2, 1) == Rational(-3, 2));
    CHECK(ob_weight_product(3, 1) == Rational(20, 9));
    for (int d = 1; d <= 20; ++d) {
        for (long m = -5; m <= 5; ++m) {
            Rational product(1);
            for (const Rational& w : obstruction_weights(d, m)) product *= w;
            CHECK(ob_weight_product(d, m) == product);
        }
    }
}

TEST_CASE("def_contribution")
{
    CHECK(def_contribution(1) == Rational(1));
    CHECK(def_contribution(2) == Rational(1));
    CHECK(def_contribution(3) == Rational(2, 3));
}

TEST_CASE("galois_cover_contribution")
{
    CHECK(galois_cover_contribution(2, 1) == Rational(-3, 4));
    CHECK(galois_cover_contribution(3, 1) == Rational(10, 9));
    for (int d = 1; d <= 12; ++d) {
        const Rational expected(d % 2 == 0 ? -1 : 1, Integer(d) * d);
        CHECK(galois_cover_contribution(d, 0) == expected);
    }
}

TEST_CASE("galois two closed forms agree (binomial reflection)")
{
    for (int d = 1; d <= 20; ++d) {
        for (long m = -10; m <= 10; ++m) {
            const Integer dd = Integer(d) * d;
            const Rational via_positive(
                (d % 2 == 0 ? -1 : 1) * gen_binomial(static_cast<long>(d) * (m + 1) - 1, d - 1),
                dd);
            const Rational via_negative(gen_binomial(-m * d - 1, d - 1), dd);
            CHECK(via_positive == via_negative);
            CHECK(galois_cover_contribution(d, m) == via_positive);
        }
    }
}

TEST_CASE("genus0_psi_integral")
{
    CHECK(genus0_psi_integral({0, 0, 0}) == Rational(1));
    CHECK(genus0_psi_integral({1, 0, 0, 0}) == Rational(1));
    CHECK(genus0_psi_integral({1, 1, 0, 0, 0}) == Rational(2));
    CHECK(genus0_psi_integral({2, 0, 0, 0, 0}) == Rational(1));
    CHECK(genus0_psi_integral({1, 0, 0}) == Rational(0));  // degree mismatch
    CHECK_THROWS_AS(genus0_psi_integral({0, 0}), std::domain_error);

    // symmetric under permutations, and 1 when one exponent carries all n-3
    CHECK(genus0_psi_integral({0, 1, 1, 0, 0}) == genus0_psi_integral({1, 1, 0, 0, 0}));
    for (int n = 3; n <= 9; ++n) {
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        exps[0] = n - 3;
        CHECK(genus0_psi_integral(exps) == Rational(1));
    }
}

TEST_CASE("relative_psi_integral")
{
    CHECK(relative_psi_integral(Partition{{1, 1}}) == Polynomial::constant(Rational(1)));
    CHECK(relative_psi_integral(Partition{{1, 1, 1}}) == Polynomial::monomial(Rational(3), 1));
    CHECK(relative_psi_integral(Partition{{2, 1, 1}}) == Polynomial::monomial(Rational(4), 1));
    CHECK(relative_psi_integral(Partition{{2, 2, 1}}) ==
          Polynomial::monomial(Rational(5), 1));
    CHECK_THROWS_AS(relative_psi_integral(Partition{{3}}), std::domain_error);
}

TEST_CASE("partition_contribution reproduces the worked strata")
{
    CHECK(partition_contribution(Partition{{1, 1}}) == Polynomial::monomial(Rational(1, 2), 1));
    CHECK(partition_contribution(Partition{{2, 1}}) ==
          Polynomial::monomial(Rational(-3, 2), 1));
    CHECK(partition_contribution(Partition{{1, 1, 1}}) ==
          Polynomial::monomial(Rational(1, 2), 2));
    CHECK_THROWS_AS(partition_contribution(Partition{{2}}), std::domain_error);
}

TEST_CASE("mc_localization d=2 and d=3 ledgers")
{
    const LocalizationReport r2 = mc_localization(2);
    CHECK(r2.match);
    CHECK(r2.total == Polynomial({Rational(-3, 4), Rational(1, 2)}));
    REQUIRE(r2.terms.size() == 2);
    CHECK(r2.terms[0].first == Partition{{2}});
    CHECK(r2.terms[0].second == Polynomial::constant(Rational(-3, 4)));
    CHECK(r2.terms[1].first == Partition{{1, 1}});
    CHECK(r2.terms[1].second == Polynomial::monomial(Rational(1, 2), 1));

    const LocalizationReport r3 = mc_localization(3);
    CHECK(r3.match);
    CHECK(r3.total == Polynomial({Rational(10, 9), Rational(-3, 2), Rational(1, 2)}));
    REQUIRE(r3.terms.size() == 3);
    CHECK(r3.terms[0].second == Polynomial::constant(Rational(10, 9)));
    CHECK(r3.terms[1].second == Polynomial::monomial(Rational(-3, 2), 1));
    CHECK(r3.terms[2].second == Polynomial::monomial(Rational(1, 2), 2));
}

TEST_CASE("localization matches the closed form for all d up to 14")
{
    for (int d = 1; d <= 14; ++d) {
        const LocalizationReport r = mc_localization(d);
        CHECK(r.match);
        CHECK(r.total == poly_binomial_in_s(d));
    }
}

TEST_CASE("galois at m = 1 - s equals the closed form evaluated at s")
{
    for (int d = 1; d <= 20; ++d) {
        const Polynomial closed = poly_binomial_in_s(d);
        for (long s = 1; s <= 10; ++s)
            CHECK(galois_cover_contribution(d, 1 - s) == closed.eval(Rational(s)));
    }
}

TEST_CASE("degree_term_decomposition")
{
    const auto d2 = degree_term_decomposition(2);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0].term == Polynomial::constant(Rational(-3, 4)));
    CHECK(d2[1].term == Polynomial::monomial(Rational(1, 2), 1));

    const auto d3 = degree_term_decomposition(3);
    REQUIRE(d3.size() == 3);
    CHECK(d3[0].term == Polynomial::constant(Rational(10, 9)));
    CHECK(d3[1].term == Polynomial::monomial(Rational(-3, 2), 1));
    CHECK(d3[2].term == Polynomial::monomial(Rational(1, 2), 2));

    for (int d = 1; d <= 12; ++d) {
        Polynomial sum;
        for (const auto& entry : degree_term_decomposition(d)) {
            CHECK(entry.homogeneous);
            CHECK(entry.matches_closed_form);
            sum = sum + entry.term;
        }
        CHECK(sum == poly_binomial_in_s(d));
    }
}
