#include <doctest.h>

#include <random>

#include "logbps/q_series.hpp"

using namespace logbps;

namespace {

// P^2 genus-0 data padded with explicit zero rows up to the given genus.
GenusTable p2_genus_table(int max_genus)
{
    const std::vector<Rational> gw = {Rational(9),          Rational(135, 4),
                                      Rational(244),        Rational(36999, 16),
                                      Rational(635634, 25), Rational(307095)};
    GenusTable t;
    t.s0 = 3;
    for (const Rational& v : gw) {
        std::vector<Rational> row(static_cast<std::size_t>(max_genus) + 1, Rational(0));
        row[0] = v;
        t.values.push_back(std::move(row));
    }
    return t;
}

// Test-only truncated division: quotient of two even series when the divisor
// has a unit (invertible) constant term. Forward substitution on
// q[k] = (t[k] - sum_{i<k} q[i] d[k-i]) / d[0].
EvenSeries divide_series(const EvenSeries& target, const EvenSeries& divisor)
{
    const int order = std::min(target.order(), divisor.order());
    std::vector<Rational> q(static_cast<std::size_t>(order / 2));
    for (int k = 0; k < order / 2; ++k) {
        Rational acc = target.coeff(k);
        for (int i = 0; i < k; ++i) acc -= q[static_cast<std::size_t>(i)] * divisor.coeff(k - i);
        q[static_cast<std::size_t>(k)] = acc / divisor.coeff(0);
    }
    return EvenSeries(std::move(q), order);
}

}  // namespace

TEST_CASE("GenusTable accessors and genus-0 row")
{
    const GenusTable t = p2_genus_table(2);
    CHECK(t.max_level() == 6);
    CHECK(t.max_genus() == 2);
    CHECK(t.at(2, 0) == Rational(135, 4));
    CHECK(t.at(2, 1) == Rational(0));
    CHECK_THROWS_AS(t.at(0, 0), std::out_of_range);
    CHECK_THROWS_AS(t.at(1, 3), std::out_of_range);

    const RayTable gw = t.genus0_row();
    CHECK(gw.kind == TableKind::GW);
    CHECK(gw.s0 == 3);
    CHECK(gw.at(4) == Rational(36999, 16));
}

TEST_CASE("f_a_series level 1 is N_1 times the sinc factor")
{
    const GenusTable t = p2_genus_table(2);
    const EvenSeries f = f_a_series(t, 1, 6);
    CHECK(f.coeff(0) == Rational(9));
    CHECK(f.coeff(1) == Rational(-3, 8));      // 9 * (-1/24)
    CHECK(f.coeff(2) == Rational(9, 1920));    // 9 * 1/1920
}

TEST_CASE("f_a_series refuses to fabricate genus data")
{
    const GenusTable t = p2_genus_table(1);
    CHECK_NOTHROW(f_a_series(t, 1, 4));
    CHECK_THROWS_AS(f_a_series(t, 1, 6), std::domain_error);
    CHECK_THROWS_AS(f_a_series(t, 0, 2), std::domain_error);
    CHECK_THROWS_AS(f_a_series(t, 7, 2), std::domain_error);
    CHECK_THROWS_AS(f_a_series(t, 1, 3), std::domain_error);
}

TEST_CASE("f_a_series h^0 coefficient is the Moebius BPS invariant")
{
    const GenusTable t = p2_genus_table(0);
    const RayTable mobius =
        mobius_bps_from_gw(t.genus0_row(), SignConvention::PaperLiteral);
    const std::vector<Rational> expected = {Rational(9),     Rational(-36),
                                            Rational(243),   Rational(-2304),
                                            Rational(25425), Rational(-307152)};
    CHECK(mobius.values == expected);
    for (int level = 1; level <= 6; ++level) {
        CHECK(f_a_series(t, level, 2).coeff(0) == mobius.at(level));
        CHECK(check_f1_equals_mobius_bps(t, level));
    }
}

TEST_CASE("f_a_series on the zero table is zero, and h^0 check still holds")
{
    GenusTable zero;
    zero.s0 = 2;
    zero.values.assign(4, std::vector<Rational>(3, Rational(0)));
    for (int level = 1; level <= 4; ++level) {
        const EvenSeries f = f_a_series(zero, level, 6);
        for (int k = 0; k < f.term_count(); ++k) CHECK(f.coeff(k) == Rational(0));
        CHECK(check_f1_equals_mobius_bps(zero, level));
    }
}

TEST_CASE("f_a_series is linear in the table values")
{
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<long> value(-9, 9);
    const auto random_table = [&](int s0) {
        GenusTable t;
        t.s0 = s0;
        t.values.assign(6, std::vector<Rational>(3, Rational(0)));
        for (auto& row : t.values)
            for (auto& v : row) v = Rational(value(rng), 2);
        return t;
    };
    for (int rep = 0; rep < 10; ++rep) {
        const GenusTable a = random_table(3), b = random_table(3);
        GenusTable sum = a;
        for (std::size_t n = 0; n < sum.values.size(); ++n)
            for (std::size_t g = 0; g < sum.values[n].size(); ++g)
                sum.values[n][g] += b.values[n][g];
        for (int level = 1; level <= 6; ++level) {
            const EvenSeries fa = f_a_series(a, level, 6);
            const EvenSeries fb = f_a_series(b, level, 6);
            const EvenSeries fs = f_a_series(sum, level, 6);
            CHECK(fs == fa + fb);
        }
    }
}

TEST_CASE("h^0 equals the Moebius BPS value on random tables")
{
    std::mt19937_64 rng(1618);
    std::uniform_int_distribution<long> value(-30, 30);
    for (int rep = 0; rep < 15; ++rep) {
        GenusTable t;
        t.s0 = 1 + static_cast<int>(rng() % 4);
        const int levels = 1 + static_cast<int>(rng() % 8);
        t.values.assign(static_cast<std::size_t>(levels),
                        std::vector<Rational>(2, Rational(0)));
        for (auto& row : t.values)
            for (auto& v : row) v = Rational(value(rng), 4);
        for (int level = 1; level <= levels; ++level)
            CHECK(check_f1_equals_mobius_bps(t, level));
    }
}

TEST_CASE("conjecture_check round-trips synthetic integral data")
{
    // Build a genus table whose F at level 1 is exactly a known symmetric
    // integer Laurent polynomial: divide the target series by the sinc factor
    // and the single d=1 sign, then read the genus coefficients off.
    const SymmetricLaurent target(Rational(-4), {Rational(2), Rational(0), Rational(5)});
    const Rational lambda(1, 2);
    const int order = 12;

    const EvenSeries target_series = laurent_to_series(target, lambda, order);
    const EvenSeries genus_series = divide_series(target_series, sinc_half_series(order));

    GenusTable t;
    t.s0 = 3;  // odd tangency so the d=1 sign is +1
    std::vector<Rational> row(static_cast<std::size_t>(order / 2));
    for (int g = 0; 2 * g < order; ++g) row[static_cast<std::size_t>(g)] = genus_series.coeff(g);
    t.values.push_back(std::move(row));

    const ConjectureReport report = conjecture_check(t, 1, target.span(), lambda, order);
    CHECK(report.laurent == target);
    CHECK(report.residual_ok);
    CHECK(report.all_integer);
}

TEST_CASE("conjecture_check flags genus-0-only data as non-polynomial")
{
    const GenusTable t = p2_genus_table(2);
    const ConjectureReport report = conjecture_check(t, 1, 1);
    CHECK_FALSE(report.residual_ok);  // 9*sinc(h/2) is not a finite cosine sum
}

TEST_CASE("conjecture_check on the zero table")
{
    GenusTable zero;
    zero.s0 = 1;
    zero.values.assign(2, std::vector<Rational>(4, Rational(0)));
    const ConjectureReport report = conjecture_check(zero, 2, 1);
    CHECK(report.laurent.is_zero());
    CHECK(report.residual_ok);
    CHECK(report.all_integer);
}
