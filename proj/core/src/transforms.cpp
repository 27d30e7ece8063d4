#include "logbps/transforms.hpp"

#include <stdexcept>

#include "logbps/combinatorics.hpp"

namespace logbps {

namespace {

void require_kind(const RayTable& t, TableKind expected, const char* op)
{
    if (t.kind != expected)
        throw std::domain_error(std::string(op) + ": table kind must be " +
                                std::string(to_string(expected)) + ", got " +
                                std::string(to_string(t.kind)));
}

void require_valid(const RayTable& t, const char* op)
{
    if (t.s0 < 1) throw std::domain_error(std::string(op) + ": s0 must be positive");
}

int sign_pow(long exponent)
{
    return exponent % 2 == 0 ? 1 : -1;
}

}  // namespace

std::string_view to_string(TableKind k)
{
    switch (k) {
        case TableKind::GW: return "GW";
        case TableKind::BPS: return "BPS";
        case TableKind::MobiusBPS: return "MOBIUS_BPS";
        case TableKind::Genus1: return "GENUS1";
    }
    return "?";
}

std::optional<TableKind> parse_table_kind(std::string_view name)
{
    if (name == "GW") return TableKind::GW;
    if (name == "BPS") return TableKind::BPS;
    if (name == "MOBIUS_BPS") return TableKind::MobiusBPS;
    if (name == "GENUS1") return TableKind::Genus1;
    return std::nullopt;
}

const Rational& RayTable::at(int level) const
{
    if (level < 1 || level > max_level())
        throw std::out_of_range("RayTable: level outside table range");
    return values[static_cast<std::size_t>(level - 1)];
}

bool IntegralityReport::all_integral() const
{
    for (const auto& e : entries)
        if (!e.integral) return false;
    return true;
}

IntegralityReport audit_integrality(const RayTable& t)
{
    IntegralityReport report;
    for (int n = 1; n <= t.max_level(); ++n)
        report.entries.push_back({n, t.at(n).is_integer(), t.at(n)});
    return report;
}

Rational mc_coefficient(int d, long s_b)
{
    if (d < 1) throw std::domain_error("mc_coefficient: d must be positive");
    if (s_b < 1) throw std::domain_error("mc_coefficient: s_B must be positive");
    return Rational(gen_binomial(static_cast<std::int64_t>(d) * (s_b - 1) - 1, d - 1),
                    Integer(d) * d);
}

RayTable gw_from_bps(const RayTable& bps)
{
    require_kind(bps, TableKind::BPS, "gw_from_bps");
    require_valid(bps, "gw_from_bps");
    RayTable gw{bps.s0, TableKind::GW, {}};
    gw.values.resize(bps.values.size());
    for (int n = 1; n <= bps.max_level(); ++n) {
        Rational acc(0);
        for (int d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            acc += mc_coefficient(d, bps.tangency(n / d)) * bps.at(n / d);
        }
        gw.values[static_cast<std::size_t>(n - 1)] = acc;
    }
    return gw;
}

BpsInversion bps_from_gw(const RayTable& gw)
{
    require_kind(gw, TableKind::GW, "bps_from_gw");
    require_valid(gw, "bps_from_gw");
    BpsInversion out;
    out.table = RayTable{gw.s0, TableKind::BPS, {}};
    out.table.values.resize(gw.values.size());
    for (int n = 1; n <= gw.max_level(); ++n) {
        Rational acc = gw.at(n);
        for (int d = 2; d <= n; ++d) {
            if (n % d != 0) continue;
            acc -= mc_coefficient(d, gw.tangency(n / d)) * out.table.at(n / d);
        }
        out.table.values[static_cast<std::size_t>(n - 1)] = acc;
    }
    out.report = audit_integrality(out.table);
    return out;
}

std::string_view to_string(SignConvention c)
{
    switch (c) {
        case SignConvention::PaperLiteral: return "paper-literal";
        case SignConvention::TotalParityInverse: return "total-parity-inverse";
        case SignConvention::Unsigned: return "unsigned";
    }
    return "?";
}

std::optional<SignConvention> parse_sign_convention(std::string_view name)
{
    if (name == "paper-literal") return SignConvention::PaperLiteral;
    if (name == "total-parity-inverse") return SignConvention::TotalParityInverse;
    if (name == "unsigned") return SignConvention::Unsigned;
    return std::nullopt;
}

RayTable mobius_bps_from_gw(const RayTable& gw, SignConvention convention)
{
    require_kind(gw, TableKind::GW, "mobius_bps_from_gw");
    require_valid(gw, "mobius_bps_from_gw");
    RayTable out{gw.s0, TableKind::MobiusBPS, {}};
    out.values.resize(gw.values.size());
    for (int n = 1; n <= gw.max_level(); ++n) {
        Rational acc(0);
        for (int d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            const int mu = mobius(d);
            if (mu == 0) continue;
            Rational term = Rational(mu, Integer(d) * d) * gw.at(n / d);
            if (convention != SignConvention::Unsigned)
                term *= Rational(sign_pow(gw.tangency(n / d) - 1));
            acc += term;
        }
        out.values[static_cast<std::size_t>(n - 1)] = acc;
    }
    return out;
}

RayTable gw_from_mobius_bps(const RayTable& mobius_table, SignConvention convention)
{
    require_kind(mobius_table, TableKind::MobiusBPS, "gw_from_mobius_bps");
    require_valid(mobius_table, "gw_from_mobius_bps");
    RayTable out{mobius_table.s0, TableKind::GW, {}};
    out.values.resize(mobius_table.values.size());
    for (int n = 1; n <= mobius_table.max_level(); ++n) {
        Rational acc(0);
        for (int d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            Rational term = Rational(1, Integer(d) * d) * mobius_table.at(n / d);
            if (convention == SignConvention::PaperLiteral)
                term *= Rational(sign_pow(mobius_table.tangency(n / d) * (d - 1)));
            acc += term;
        }
        if (convention == SignConvention::TotalParityInverse)
            acc *= Rational(sign_pow(mobius_table.tangency(n) - 1));
        out.values[static_cast<std::size_t>(n - 1)] = acc;
    }
    return out;
}

CompositionCheck mobius_composition_check(const RayTable& gw, SignConvention convention)
{
    CompositionCheck check;
    check.recomposed = gw_from_mobius_bps(mobius_bps_from_gw(gw, convention), convention);
    check.all_ok = true;
    for (int n = 1; n <= gw.max_level(); ++n) {
        const bool ok = check.recomposed.at(n) == gw.at(n);
        check.level_ok.push_back(ok);
        check.all_ok = check.all_ok && ok;
    }
    return check;
}

Rational genus1_coefficient(int d, long s_b)
{
    if (d < 1) throw std::domain_error("genus1_coefficient: d must be positive");
    if (s_b < 1) throw std::domain_error("genus1_coefficient: s_B must be positive");
    return Rational(Integer(2 - s_b) *
                        gen_binomial(static_cast<std::int64_t>(d) * (s_b - 1) - 1, d - 1),
                    Integer(24));
}

RayTable genus1_correction(const RayTable& bps)
{
    require_kind(bps, TableKind::BPS, "genus1_correction");
    require_valid(bps, "genus1_correction");
    RayTable out{bps.s0, TableKind::Genus1, {}};
    out.values.resize(bps.values.size());
    for (int n = 1; n <= bps.max_level(); ++n) {
        Rational acc(0);
        for (int d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            acc += genus1_coefficient(d, bps.tangency(n / d)) * bps.at(n / d);
        }
        out.values[static_cast<std::size_t>(n - 1)] = acc;
    }
    return out;
}

}  // namespace logbps
