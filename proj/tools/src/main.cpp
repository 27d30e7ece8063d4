#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "commands.hpp"

namespace {

using namespace logbps;
using namespace logbps::cli;

struct CommonOptions {
    std::string format = "markdown";
    std::string output_path;
    std::string input_path;
    bool strict = false;
};

void add_format(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("--format", opts.format, "Output format: csv, json, or markdown")
        ->check(CLI::IsMember({"csv", "json", "markdown"}));
    cmd->add_option("--output", opts.output_path, "Write the report to this file");
}

void add_input(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("--input", opts.input_path, "Input table (JSON)")->required();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"logbps: exact multiple-cover / BPS invariant toolkit"};
    app.require_subcommand(1);

    CommonOptions opts;

    int mc_d = 0;
    long mc_s = 0;
    auto* cmd_mc = app.add_subcommand("mc", "Print the multiple-cover coefficient mc(d, s)");
    cmd_mc->add_option("d", mc_d, "cover degree")->required()->check(CLI::PositiveNumber);
    cmd_mc->add_option("s", mc_s, "tangency order")->required()->check(CLI::PositiveNumber);

    int loc_d = 0, loc_max_d = 0;
    auto* cmd_localize =
        app.add_subcommand("localize", "Per-partition localization ledger for degree d");
    cmd_localize->add_option("d", loc_d, "cover degree")->check(CLI::PositiveNumber);
    cmd_localize->add_option("--max-d", loc_max_d, "run every degree from 1 to this bound")
        ->check(CLI::PositiveNumber);
    add_format(cmd_localize, opts);

    int dec_d = 0, dec_max_d = 0;
    auto* cmd_decompose =
        app.add_subcommand("decompose", "Degree-term decomposition of the localization sum");
    cmd_decompose->add_option("d", dec_d, "cover degree")->check(CLI::PositiveNumber);
    cmd_decompose->add_option("--max-d", dec_max_d, "run every degree from 1 to this bound")
        ->check(CLI::PositiveNumber);
    add_format(cmd_decompose, opts);

    auto* cmd_invert =
        app.add_subcommand("invert", "GW -> BPS triangular inversion with integrality audit");
    add_input(cmd_invert, opts);
    add_format(cmd_invert, opts);
    cmd_invert->add_flag("--strict", opts.strict, "Exit 1 on integrality violation");

    auto* cmd_forward = app.add_subcommand("forward", "BPS -> GW multiple-cover sum");
    add_input(cmd_forward, opts);
    add_format(cmd_forward, opts);

    std::string convention_name = "paper-literal";
    auto* cmd_mobius =
        app.add_subcommand("mobius", "Moebius BPS transform, inverse, and composition check");
    add_input(cmd_mobius, opts);
    add_format(cmd_mobius, opts);
    cmd_mobius->add_flag("--strict", opts.strict, "Exit 1 on integrality violation");
    cmd_mobius
        ->add_option("--sign-convention", convention_name,
                     "paper-literal, total-parity-inverse, or unsigned")
        ->check(CLI::IsMember({"paper-literal", "total-parity-inverse", "unsigned"}));

    auto* cmd_genus1 = app.add_subcommand("genus1", "Genus-1 multiple-cover correction");
    add_input(cmd_genus1, opts);
    add_format(cmd_genus1, opts);
    cmd_genus1->add_flag("--strict", opts.strict, "Exit 1 when a value leaves (1/24)Z");

    int truncation = 0;
    auto* cmd_fq = app.add_subcommand("fq", "Higher-genus BPS series F_A as a series in h");
    add_input(cmd_fq, opts);
    add_format(cmd_fq, opts);
    cmd_fq->add_option("--truncation", truncation, "Even truncation order in h");

    int span = 0;
    std::string lambda_text = "1/2";
    auto* cmd_conjecture =
        app.add_subcommand("conjecture", "Laurent-polynomial fit and integrality checks on F_A");
    add_input(cmd_conjecture, opts);
    add_format(cmd_conjecture, opts);
    cmd_conjecture->add_option("--span", span, "Laurent span to fit")->required();
    cmd_conjecture->add_option("--truncation", truncation, "Even truncation order in h");
    cmd_conjecture->add_option("--lambda", lambda_text, "Exponent in q = e^{i*lambda*h} (p/q)");
    cmd_conjecture->add_flag("--strict", opts.strict, "Exit 1 on non-integer coefficients");

    auto* cmd_p2 = app.add_subcommand("table-p2", "Built-in (P^2, cubic) regression, s0 = 3");
    add_format(cmd_p2, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const OutputFormat format = *parse_output_format(opts.format);

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!opts.output_path.empty()) {
        file_out.open(opts.output_path, std::ios::binary);
        if (!file_out) {
            std::cerr << "error: cannot open output file: " << opts.output_path << "\n";
            return kExitInput;
        }
        out = &file_out;
    }

    const auto degree_range = [&](const CLI::App* cmd, int d, int max_d,
                                  std::pair<int, int>& range) {
        const bool has_d = cmd->count("d") > 0;
        const bool has_max = cmd->count("--max-d") > 0;
        if (has_d == has_max) {
            std::cerr << "error: give exactly one of a positional degree or --max-d\n";
            return false;
        }
        range = has_d ? std::pair{d, d} : std::pair{1, max_d};
        return true;
    };

    try {
        if (*cmd_mc) return run_mc(mc_d, mc_s, *out);
        if (*cmd_localize) {
            std::pair<int, int> range;
            if (!degree_range(cmd_localize, loc_d, loc_max_d, range)) return kExitUsage;
            return run_localize(range.first, range.second, format, *out);
        }
        if (*cmd_decompose) {
            std::pair<int, int> range;
            if (!degree_range(cmd_decompose, dec_d, dec_max_d, range)) return kExitUsage;
            return run_decompose(range.first, range.second, format, *out);
        }
        if (*cmd_invert)
            return run_invert(parse_ray_table(load_file(opts.input_path)), format, opts.strict,
                              *out);
        if (*cmd_forward)
            return run_forward(parse_ray_table(load_file(opts.input_path)), format, *out);
        if (*cmd_mobius)
            return run_mobius(parse_ray_table(load_file(opts.input_path)),
                              *parse_sign_convention(convention_name), format, opts.strict,
                              *out);
        if (*cmd_genus1)
            return run_genus1(parse_ray_table(load_file(opts.input_path)), format, opts.strict,
                              *out);
        if (*cmd_fq)
            return run_fq(parse_genus_table(load_file(opts.input_path)), truncation, format,
                          *out);
        if (*cmd_conjecture) {
            const auto lambda = Rational::parse(lambda_text);
            if (!lambda || lambda->is_zero()) {
                std::cerr << "error: --lambda must be a nonzero rational p/q\n";
                return kExitUsage;
            }
            return run_conjecture(parse_genus_table(load_file(opts.input_path)), span,
                                  truncation, *lambda, format, opts.strict, *out);
        }
        if (*cmd_p2) return run_table_p2(format, *out);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
