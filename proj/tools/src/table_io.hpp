#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "logbps/q_series.hpp"
#include "logbps/transforms.hpp"

// JSON schema for ingested tables (all rationals are strings, never JSON
// numbers, to keep them float-free):
//
//   ray table:    {"s0": 3, "kind": "GW", "values": ["9", "135/4", ...]}
//   genus table:  {"s0": 3, "genus_values": [["9", "0"], ["135/4", "0"], ...]}
//
// values is indexed from level 1; genus_values rows are levels, columns are
// genera starting at 0, and rows must be rectangular. Dense tables are part
// of the contract: absent physical values must be written as "0".

namespace logbps::cli {

/// Malformed input file or schema violation (exit code 2 territory).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json, Markdown };

std::optional<OutputFormat> parse_output_format(std::string_view name);

std::string load_file(const std::string& path);

RayTable parse_ray_table(const std::string& json_text);
GenusTable parse_genus_table(const std::string& json_text);

nlohmann::json ray_table_to_json(const RayTable& t);
nlohmann::json genus_table_to_json(const GenusTable& t);

/// "level,value" CSV with one row per level.
std::string ray_table_csv(const RayTable& t);
/// "level,genus,value" CSV, level-major.
std::string genus_table_csv(const GenusTable& t);

std::string ray_table_markdown(const RayTable& t);

/// Quotes a CSV field when it contains a comma or quote.
std::string csv_field(std::string_view text);

}  // namespace logbps::cli
