#include <doctest.h>

#include <random>

#include "logbps/combinatorics.hpp"
#include "logbps/series.hpp"

using namespace logbps;

TEST_CASE("sinc_half_series")
{
    CHECK(sinc_half_series(2) == EvenSeries({Rational(1)}, 2));
    CHECK(sinc_half_series(4) == EvenSeries({Rational(1), Rational(-1, 24)}, 4));
    CHECK(sinc_half_series(6) ==
          EvenSeries({Rational(1), Rational(-1, 24), Rational(1, 1920)}, 6));
    CHECK_THROWS_AS(sinc_half_series(3), std::domain_error);
    CHECK_THROWS_AS(sinc_half_series(0), std::domain_error);
}

TEST_CASE("EvenSeries arithmetic truncates to the smaller order")
{
    const EvenSeries a({Rational(1), Rational(2), Rational(3)}, 6);
    const EvenSeries b({Rational(1), Rational(1)}, 4);
    const EvenSeries sum = a + b;
    CHECK(sum.order() == 4);
    CHECK(sum.coeff(0) == Rational(2));
    CHECK(sum.coeff(1) == Rational(3));

    const EvenSeries prod = a * b;
    CHECK(prod.order() == 4);
    CHECK(prod.coeff(0) == Rational(1));
    CHECK(prod.coeff(1) == Rational(3));  // 1*1 + 2*1

    const EvenSeries scaled = Rational(2) * a;
    CHECK(scaled.coeff(2) == Rational(6));
}

TEST_CASE("EvenSeries ring laws on random inputs")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    const auto random_series = [&](int order) {
        std::vector<Rational> c(static_cast<std::size_t>(order / 2));
        for (auto& v : c) v = Rational(num(rng), den(rng));
        return EvenSeries(std::move(c), order);
    };
    for (int i = 0; i < 40; ++i) {
        const EvenSeries a = random_series(10), b = random_series(10), c = random_series(10);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("SymmetricLaurent basics")
{
    const SymmetricLaurent L(Rational(1), {Rational(1)});  // q + 1 + q^-1
    CHECK(L.span() == 1);
    CHECK(L.value_at_one() == Rational(3));
    CHECK(L.all_integer());
    CHECK(L.str() == "q + 1 + q^-1");

    const SymmetricLaurent trimmed(Rational(2), {Rational(0), Rational(0)});
    CHECK(trimmed.span() == 0);
    CHECK(trimmed == SymmetricLaurent::constant(Rational(2)));

    CHECK_FALSE(SymmetricLaurent(Rational(1, 2), {}).all_integer());
    CHECK(SymmetricLaurent().is_zero());
    CHECK(SymmetricLaurent().str() == "0");
    CHECK(SymmetricLaurent(Rational(0), {Rational(-2), Rational(3)}).str() ==
          "3*q^2 - 2*q - 2*q^-1 + 3*q^-2");
}

TEST_CASE("laurent_to_series")
{
    const Rational half(1, 2);

    const EvenSeries constant = laurent_to_series(SymmetricLaurent::constant(Rational(9)),
                                                  half, 8);
    CHECK(constant.coeff(0) == Rational(9));
    CHECK(constant.coeff(1) == Rational(0));
    CHECK(constant.coeff(3) == Rational(0));

    // q + 1 + q^-1 = 1 + 2cos(h/2) = 3 - h^2/4 + ...
    const SymmetricLaurent L(Rational(1), {Rational(1)});
    const EvenSeries s = laurent_to_series(L, half, 4);
    CHECK(s.coeff(0) == Rational(3));
    CHECK(s.coeff(1) == Rational(-1, 4));

    CHECK_THROWS_AS(laurent_to_series(L, Rational(0), 4), std::domain_error);
}

TEST_CASE("laurent value at q=1 equals the h^0 coefficient")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int i = 0; i < 50; ++i) {
        std::vector<Rational> pairs(4);
        for (auto& c : pairs) c = Rational(coeff(rng), 3);
        const SymmetricLaurent L(Rational(coeff(rng)), std::move(pairs));
        const EvenSeries s = laurent_to_series(L, Rational(1, 2), 6);
        CHECK(s.coeff(0) == L.value_at_one());
    }
}

TEST_CASE("fit_laurent round trips and residuals")
{
    const Rational half(1, 2);

    // round trip of q + 1 + q^-1
    const SymmetricLaurent L(Rational(1), {Rational(1)});
    const LaurentFit round = fit_laurent(laurent_to_series(L, half, 8), half, 1);
    CHECK(round.laurent == L);
    CHECK(round.residual_ok);

    // constant series with span 0
    const LaurentFit constant = fit_laurent(EvenSeries({Rational(5)}, 2), half, 0);
    CHECK(constant.laurent == SymmetricLaurent::constant(Rational(5)));
    CHECK(constant.residual_ok);

    // sinc(h/2) is not a finite cosine sum: the 2x2 solve gives c0 = 2/3,
    // c1 = 1/6 and the retained h^4 coefficient disagrees.
    const LaurentFit sinc = fit_laurent(sinc_half_series(6), half, 1);
    CHECK(sinc.laurent.constant_term() == Rational(2, 3));
    CHECK(sinc.laurent.pair_coeff(1) == Rational(1, 6));
    CHECK_FALSE(sinc.residual_ok);

    CHECK_THROWS_AS(fit_laurent(sinc_half_series(4), half, 2), std::domain_error);
}

TEST_CASE("fit_laurent inverts laurent_to_series for spans up to 8")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    const Rational half(1, 2);
    for (int span = 0; span <= 8; ++span) {
        for (int rep = 0; rep < 8; ++rep) {
            std::vector<Rational> pairs(static_cast<std::size_t>(span));
            for (auto& c : pairs) c = Rational(num(rng), den(rng));
            const SymmetricLaurent L(Rational(num(rng), den(rng)), std::move(pairs));
            const int order = 2 * span + 4;
            const LaurentFit fit = fit_laurent(laurent_to_series(L, half, order), half, span);
            CHECK(fit.laurent == L);
            CHECK(fit.residual_ok);
        }
    }
}
