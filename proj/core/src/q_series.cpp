#include "logbps/q_series.hpp"

#include <stdexcept>

#include "logbps/combinatorics.hpp"

namespace logbps {

int GenusTable::max_genus() const
{
    if (values.empty()) return 0;
    return static_cast<int>(values.front().size()) - 1;
}

const Rational& GenusTable::at(int level, int genus) const
{
    if (level < 1 || level > max_level())
        throw std::out_of_range("GenusTable: level outside table range");
    const auto& row = values[static_cast<std::size_t>(level - 1)];
    if (genus < 0 || genus >= static_cast<int>(row.size()))
        throw std::out_of_range("GenusTable: genus outside table range");
    return row[static_cast<std::size_t>(genus)];
}

RayTable GenusTable::genus0_row() const
{
    RayTable gw{s0, TableKind::GW, {}};
    for (int n = 1; n <= max_level(); ++n) gw.values.push_back(at(n, 0));
    return gw;
}

EvenSeries f_a_series(const GenusTable& data, int level, int truncation)
{
    if (data.s0 < 1) throw std::domain_error("f_a_series: s0 must be positive");
    if (level < 1 || level > data.max_level())
        throw std::domain_error("f_a_series: level outside table range");
    if (truncation < 2 || truncation % 2 != 0)
        throw std::domain_error("f_a_series: truncation must be a positive even integer");
    if (truncation > 2 * data.max_genus() + 2)
        throw std::domain_error("f_a_series: truncation exceeds the supplied genus data");

    std::vector<Rational> genus_sum(static_cast<std::size_t>(truncation / 2));
    for (int d = 1; d <= level; ++d) {
        if (level % d != 0) continue;
        const int mu = mobius(d);
        if (mu == 0) continue;
        const long s_b = static_cast<long>(level / d) * data.s0;
        const Rational outer = Rational(mu) * Rational((s_b - 1) % 2 == 0 ? 1 : -1);
        for (int g = 0; 2 * g < truncation; ++g) {
            const Rational dpow = Rational(Integer(d)).pow(2L * g - 2);
            genus_sum[static_cast<std::size_t>(g)] += outer * dpow * data.at(level / d, g);
        }
    }
    return sinc_half_series(truncation) * EvenSeries(std::move(genus_sum), truncation);
}

bool check_f1_equals_mobius_bps(const GenusTable& data, int level)
{
    const Rational h0 = f_a_series(data, level, 2).coeff(0);
    const RayTable mobius =
        mobius_bps_from_gw(data.genus0_row(), SignConvention::PaperLiteral);
    return h0 == mobius.at(level);
}

ConjectureReport conjecture_check(const GenusTable& data, int level, int span,
                                  const Rational& lambda, int truncation)
{
    if (truncation == 0) truncation = 2 * data.max_genus() + 2;
    const EvenSeries series = f_a_series(data, level, truncation);
    const LaurentFit fit = fit_laurent(series, lambda, span);
    ConjectureReport report;
    report.laurent = fit.laurent;
    report.residual_ok = fit.residual_ok;
    report.all_integer = fit.laurent.all_integer();
    return report;
}

}  // namespace logbps
