#pragma once

#include <vector>

#include "logbps/series.hpp"
#include "logbps/transforms.hpp"

namespace logbps {

/// Higher-genus invariant values N_{g, n*A0} on a ray, dense in both indices:
/// values[n-1][g] holds (level n, genus g) and rows are rectangular up to
/// max_genus. Unknown-but-physically-present entries must be entered as
/// explicit zeros; the table never fabricates data beyond its bounds.
struct GenusTable {
    int s0 = 1;
    std::vector<std::vector<Rational>> values;

    int max_level() const { return static_cast<int>(values.size()); }
    int max_genus() const;
    const Rational& at(int level, int genus) const;

    /// The genus-0 row as a GW ray table (N_{0,A} = N_A).
    RayTable genus0_row() const;
};

/// The higher-genus BPS generating function at the given level, truncated to
/// the given (even) order in h:
///
///   F(h) = sinc(h/2) * sum_{d | level} (-1)^{s_B - 1} mu(d)
///            * sum_{g = 0}^{max_genus} d^{2g-2} N_{g, level/d} h^{2g},
///
/// with s_B = (level/d) * s0. The d^{2g-2} factor sits inside the genus sum,
/// the only placement under which the h -> 0 limit reproduces the genus-0
/// Moebius BPS invariant. Truncation beyond 2*max_genus + 2 would require
/// genus data that was not supplied and throws std::domain_error.
EvenSeries f_a_series(const GenusTable& data, int level, int truncation);

/// True iff the h^0 coefficient of f_a_series equals the paper-literal
/// Moebius BPS transform of the genus-0 row at that level.
bool check_f1_equals_mobius_bps(const GenusTable& data, int level);

struct ConjectureReport {
    SymmetricLaurent laurent;
    bool residual_ok = false;
    bool all_integer = false;
};

/// Fits f_a_series(data, level) against a symmetric Laurent polynomial of the
/// given span under q = e^{i*lambda*h} and reports whether the fit also
/// matches the higher retained orders and whether every fitted coefficient is
/// an integer. truncation = 0 selects the maximum the data supports.
ConjectureReport conjecture_check(const GenusTable& data, int level, int span,
                                  const Rational& lambda = Rational(1, 2),
                                  int truncation = 0);

}  // namespace logbps
