#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logbps/rational.hpp"

namespace logbps {

enum class TableKind { GW, BPS, MobiusBPS, Genus1 };

std::string_view to_string(TableKind k);
std::optional<TableKind> parse_table_kind(std::string_view name);

/// Invariant values along a ray n * A0, where the primitive class A0 meets
/// the divisor with tangency s0. Tables are dense: values[n-1] holds level n
/// and every level from 1 to max_level must be present (physical absence is
/// an explicit zero). The tangency of the level-n class is n * s0, derived on
/// demand and never stored.
struct RayTable {
    int s0 = 1;
    TableKind kind = TableKind::GW;
    std::vector<Rational> values;

    int max_level() const { return static_cast<int>(values.size()); }
    const Rational& at(int level) const;
    long tangency(int level) const { return static_cast<long>(level) * s0; }
};

struct IntegralityEntry {
    int level = 0;
    bool integral = false;
    Rational value;  ///< the offending (or confirming) value at that level
};

struct IntegralityReport {
    std::vector<IntegralityEntry> entries;  ///< one per level, ascending
    bool all_integral() const;
};

IntegralityReport audit_integrality(const RayTable& t);

/// Multiple-cover coefficient mc(d, s_B) = (1/d^2) binom(d(s_B-1)-1, d-1).
/// Requires d >= 1 and s_B >= 1.
Rational mc_coefficient(int d, long s_b);

/// N_n = sum_{d | n} mc(d, (n/d) s0) * n_{n/d}. Input kind must be BPS.
RayTable gw_from_bps(const RayTable& bps);

struct BpsInversion {
    RayTable table;  ///< kind BPS
    IntegralityReport report;
};

/// Triangular inversion of gw_from_bps, in increasing level order:
/// n_n = N_n - sum_{d | n, d > 1} mc(d, (n/d) s0) * n_{n/d}.
/// Input kind must be GW. Non-integrality is reported, never thrown.
BpsInversion bps_from_gw(const RayTable& gw);

/// Sign placement for the Moebius pair. The two formulas as usually printed
/// are not mutually inverse whenever some summand tangency is even (the
/// diagonal composition term picks up (-1)^{s-1}), and the printed forms do
/// not pin down the intended convention; the variants below are the
/// candidate placements.
enum class SignConvention {
    /// Forward sign (-1)^{s_B - 1} on the summand; inverse sign
    /// (-1)^{s_B (d-1)} on the summand, exactly as printed.
    PaperLiteral,
    /// Same forward transform; inverse carries the parity of the TOTAL class,
    /// N_n = (-1)^{n s0 - 1} sum_d (1/d^2) nt_{n/d}. Mutually inverse for
    /// every parity.
    TotalParityInverse,
    /// No parity factor on either side (the classical Moebius pair).
    Unsigned,
};

std::string_view to_string(SignConvention c);
std::optional<SignConvention> parse_sign_convention(std::string_view name);

/// nt_n = sum_{d | n} (mu(d)/d^2) * sign * N_{n/d}, where under PaperLiteral
/// and TotalParityInverse sign = (-1)^{(n/d) s0 - 1} and under Unsigned
/// sign = 1. Input kind must be GW.
RayTable mobius_bps_from_gw(const RayTable& gw, SignConvention convention);

/// Inverse direction per the convention (see SignConvention). Input kind must
/// be MobiusBPS.
RayTable gw_from_mobius_bps(const RayTable& mobius, SignConvention convention);

struct CompositionCheck {
    std::vector<bool> level_ok;  ///< level n matches original at index n-1
    bool all_ok = false;
    RayTable recomposed;
};

/// Runs gw_from_mobius_bps(mobius_bps_from_gw(gw)) under the given convention
/// and compares the result level by level against the input.
CompositionCheck mobius_composition_check(const RayTable& gw, SignConvention convention);

/// Genus-1 multiple-cover correction:
/// N1_n = sum_{d | n} ((2 - s_B)/24) binom(d(s_B-1)-1, d-1) * n_{n/d} with
/// s_B = (n/d) s0. Values land in (1/24) Z for integer inputs. Input kind
/// must be BPS; output kind is Genus1.
RayTable genus1_correction(const RayTable& bps);

/// The per-divisor coefficient of genus1_correction, exposed for audits:
/// ((2 - s_B)/24) binom(d(s_B-1)-1, d-1).
Rational genus1_coefficient(int d, long s_b);

}  // namespace logbps
