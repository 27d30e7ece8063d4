#include "table_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace logbps::cli {

using nlohmann::json;

std::optional<OutputFormat> parse_output_format(std::string_view name)
{
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "markdown") return OutputFormat::Markdown;
    return std::nullopt;
}

std::string load_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

json parse_json(const std::string& text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("input is not valid JSON");
    if (!j.is_object()) throw InputError("input must be a JSON object");
    return j;
}

int parse_s0(const json& j)
{
    if (!j.contains("s0") || !j.at("s0").is_number_integer())
        throw InputError("field \"s0\" must be a positive integer");
    const auto s0 = j.at("s0").get<long>();
    if (s0 < 1) throw InputError("field \"s0\" must be a positive integer");
    return static_cast<int>(s0);
}

Rational parse_value(const json& v, const std::string& where)
{
    if (!v.is_string())
        throw InputError(where + ": rationals must be written as strings, not JSON numbers");
    const auto parsed = Rational::parse(v.get<std::string>());
    if (!parsed) throw InputError(where + ": not a rational of the form \"p/q\"");
    return *parsed;
}

}  // namespace

RayTable parse_ray_table(const std::string& json_text)
{
    const json j = parse_json(json_text);
    RayTable t;
    t.s0 = parse_s0(j);
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw InputError("field \"kind\" must be a string");
    const auto kind = parse_table_kind(j.at("kind").get<std::string>());
    if (!kind) throw InputError("field \"kind\" must be one of GW, BPS, MOBIUS_BPS, GENUS1");
    t.kind = *kind;
    if (!j.contains("values") || !j.at("values").is_array() || j.at("values").empty())
        throw InputError("field \"values\" must be a non-empty array");
    int level = 0;
    for (const auto& v : j.at("values"))
        t.values.push_back(parse_value(v, "values[" + std::to_string(level++) + "]"));
    return t;
}

GenusTable parse_genus_table(const std::string& json_text)
{
    const json j = parse_json(json_text);
    GenusTable t;
    t.s0 = parse_s0(j);
    if (!j.contains("genus_values") || !j.at("genus_values").is_array() ||
        j.at("genus_values").empty())
        throw InputError("field \"genus_values\" must be a non-empty array of arrays");
    std::size_t width = 0;
    int level = 0;
    for (const auto& row : j.at("genus_values")) {
        if (!row.is_array() || row.empty())
            throw InputError("genus_values rows must be non-empty arrays");
        if (level == 0) width = row.size();
        if (row.size() != width)
            throw InputError("genus_values rows must all have the same length");
        std::vector<Rational> parsed;
        int g = 0;
        for (const auto& v : row)
            parsed.push_back(parse_value(v, "genus_values[" + std::to_string(level) + "][" +
                                                std::to_string(g++) + "]"));
        t.values.push_back(std::move(parsed));
        ++level;
    }
    return t;
}

json ray_table_to_json(const RayTable& t)
{
    json j;
    j["s0"] = t.s0;
    j["kind"] = std::string(to_string(t.kind));
    json values = json::array();
    for (const Rational& v : t.values) values.push_back(v.str());
    j["values"] = values;
    return j;
}

json genus_table_to_json(const GenusTable& t)
{
    json j;
    j["s0"] = t.s0;
    json rows = json::array();
    for (const auto& row : t.values) {
        json r = json::array();
        for (const Rational& v : row) r.push_back(v.str());
        rows.push_back(r);
    }
    j["genus_values"] = rows;
    return j;
}

std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string ray_table_csv(const RayTable& t)
{
    std::string out = "level,value\n";
    for (int n = 1; n <= t.max_level(); ++n)
        out += std::to_string(n) + "," + t.at(n).str() + "\n";
    return out;
}

std::string genus_table_csv(const GenusTable& t)
{
    std::string out = "level,genus,value\n";
    for (int n = 1; n <= t.max_level(); ++n)
        for (int g = 0; g <= t.max_genus(); ++g)
            out += std::to_string(n) + "," + std::to_string(g) + "," + t.at(n, g).str() + "\n";
    return out;
}

std::string ray_table_markdown(const RayTable& t)
{
    std::string out = "| level | value |\n|---:|---:|\n";
    for (int n = 1; n <= t.max_level(); ++n)
        out += "| " + std::to_string(n) + " | " + t.at(n).str() + " |\n";
    return out;
}

}  // namespace logbps::cli
