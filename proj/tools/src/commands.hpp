#pragma once

#include <ostream>

#include "table_io.hpp"

namespace logbps::cli {

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;  // integrality violation under --strict, localization mismatch
constexpr int kExitInput = 2;      // input parse/validation error
constexpr int kExitUsage = 3;      // invalid flag combination

int run_mc(int d, long s, std::ostream& out);
int run_localize(int d_from, int d_to, OutputFormat format, std::ostream& out);
int run_decompose(int d_from, int d_to, OutputFormat format, std::ostream& out);

int run_invert(const RayTable& input, OutputFormat format, bool strict, std::ostream& out);
int run_forward(const RayTable& input, OutputFormat format, std::ostream& out);
int run_mobius(const RayTable& input, SignConvention convention, OutputFormat format,
               bool strict, std::ostream& out);
int run_genus1(const RayTable& input, OutputFormat format, bool strict, std::ostream& out);

int run_fq(const GenusTable& input, int truncation, OutputFormat format, std::ostream& out);
int run_conjecture(const GenusTable& input, int span, int truncation, const Rational& lambda,
                   OutputFormat format, bool strict, std::ostream& out);

int run_table_p2(OutputFormat format, std::ostream& out);

/// Reference data for P^2 relative to a smooth cubic, s0 = 3, levels 1..6.
const RayTable& p2_gw_table();
const RayTable& p2_expected_bps();
const RayTable& p2_expected_mobius_bps();

}  // namespace logbps::cli
