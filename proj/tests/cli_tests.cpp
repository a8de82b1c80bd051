// Golden tests of the command-line tool: run the binary, parse its CSV/JSON
// output, compare parsed numbers with stated tolerances, and validate every
// JSON document against the schema files shipped in schemas/.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef HYDRODYN_CLI_PATH
#error "HYDRODYN_CLI_PATH must point at the CLI binary"
#endif
#ifndef HYDRODYN_SCHEMA_DIR
#error "HYDRODYN_SCHEMA_DIR must point at the schema directory"
#endif

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(HYDRODYN_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> footers;  // '#' comment lines, prefix stripped
};

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::stringstream ss(text);
    std::string line;
    bool first = true;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            csv.footers.push_back(line.substr(line.find_first_not_of("# ")));
            continue;
        }
        if (first) {
            csv.header = split(line, ',');
            first = false;
        } else {
            csv.rows.push_back(split(line, ','));
        }
    }
    return csv;
}

size_t column(const Csv& csv, const std::string& name) {
    for (size_t i = 0; i < csv.header.size(); ++i)
        if (csv.header[i] == name) return i;
    FAIL("missing CSV column: ", name);
    return 0;
}

double num_at(const Csv& csv, size_t row, const std::string& name) {
    return std::strtod(csv.rows.at(row).at(column(csv, name)).c_str(), nullptr);
}

// Minimal structural validator for the schema subset used in schemas/:
// "type", "required", "properties", "items".
bool validate_schema(const json& schema, const json& value, std::string& error) {
    if (schema.contains("type")) {
        const std::string type = schema["type"];
        const bool ok = (type == "object" && value.is_object()) ||
                        (type == "array" && value.is_array()) ||
                        (type == "string" && value.is_string()) ||
                        (type == "integer" && value.is_number_integer()) ||
                        (type == "number" && value.is_number()) ||
                        (type == "boolean" && value.is_boolean());
        if (!ok) {
            error = "expected type " + type + ", got " + value.dump().substr(0, 60);
            return false;
        }
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"]) {
            if (!value.contains(key.get<std::string>())) {
                error = "missing required key " + key.get<std::string>();
                return false;
            }
        }
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema["properties"].items()) {
            if (value.contains(key) && !validate_schema(sub, value[key], error)) {
                error = key + ": " + error;
                return false;
            }
        }
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!validate_schema(schema["items"], item, error)) return false;
    return true;
}

json load_schema(const std::string& name) {
    const std::string path = std::string(HYDRODYN_SCHEMA_DIR) + "/" + name;
    std::ifstream f(path);
    REQUIRE_MESSAGE(f.good(), "cannot open ", path);
    return json::parse(f);
}

void check_against_schema(const std::string& schema_name, const json& doc) {
    std::string error;
    const bool ok = validate_schema(load_schema(schema_name), doc, error);
    CHECK_MESSAGE(ok, schema_name, ": ", error);
}

}  // namespace

TEST_CASE("calibrate golden values") {
    const auto result = run_cli("calibrate");
    REQUIRE(result.exit_code == 0);
    const auto csv = parse_csv(result.output);
    REQUIRE(csv.rows.size() == 1);
    CHECK(num_at(csv, 0, "v0") == doctest::Approx(2.187e6).epsilon(1e-3));
    CHECK(num_at(csv, 0, "r0") == doctest::Approx(3.33e-10).epsilon(5e-3));
    CHECK(num_at(csv, 0, "nu0") == doctest::Approx(6.57e15).epsilon(5e-3));
}

TEST_CASE("calibrate validation and JSON schema") {
    const auto bad = run_cli("calibrate --e0-ev 0");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("E0 must be positive") != std::string::npos);

    const auto result = run_cli("calibrate --format json");
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.output);
    check_against_schema("calibrate.schema.json", doc);
    CHECK(doc["v0"].get<double>() == doctest::Approx(2.187e6).epsilon(1e-3));
}

TEST_CASE("spectrum emits the visible series") {
    const auto result = run_cli("spectrum --n 2 --n-max 6");
    REQUIRE(result.exit_code == 0);
    const auto csv = parse_csv(result.output);
    REQUIRE(csv.rows.size() == 4);
    // Sorted by frequency descending.
    const std::array<double, 4> expected_nm{410.3, 434.2, 486.3, 656.5};
    for (size_t i = 0; i < expected_nm.size(); ++i) {
        CHECK(num_at(csv, i, "wavelength_nm") ==
              doctest::Approx(expected_nm[i]).epsilon(5e-3));
        CHECK(num_at(csv, i, "frequency_hz") >
              (i + 1 < csv.rows.size() ? num_at(csv, i + 1, "frequency_hz") : 0.0));
    }
}

TEST_CASE("spectrum edge cases") {
    const auto empty = run_cli("spectrum --n 3 --n-max 3");
    CHECK(empty.exit_code == 0);
    const auto csv = parse_csv(empty.output);
    CHECK(csv.header.size() == 5);
    CHECK(csv.rows.empty());

    CHECK(run_cli("spectrum --n 3 --m 2").exit_code == 2);

    const auto result = run_cli("spectrum --n 2 --n-max 6 --format json");
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.output);
    check_against_schema("spectrum.schema.json", doc);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 4);
}

TEST_CASE("decay trace output") {
    const auto result = run_cli("decay-trace --n 1 --m 2 --periods 10 --steps 10000");
    REQUIRE(result.exit_code == 0);
    const auto csv = parse_csv(result.output);
    CHECK(csv.rows.size() == 10001);

    double residual = -1.0;
    bool saw_guard = false;
    for (const auto& footer : csv.footers)
        if (footer.rfind("endpoint_residual,", 0) == 0)
            residual = std::strtod(footer.c_str() + 18, nullptr);
    REQUIRE(residual >= 0.0);
    CHECK(residual < 1e-6);

    const size_t guard_col = column(csv, "guard");
    for (const auto& row : csv.rows)
        if (row.at(guard_col) == "1") saw_guard = true;
    CHECK(saw_guard);  // guard-band rows are flagged, not dropped

    CHECK(run_cli("decay-trace --steps 5000").exit_code == 2);
    CHECK(run_cli("decay-trace --n 2 --m 2").exit_code == 2);
}

TEST_CASE("decay trace JSON schema") {
    const auto result = run_cli("decay-trace --steps 10000 --format json");
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.output);
    check_against_schema("decay_trace.schema.json", doc);
    CHECK(doc["rows"].size() == 10001);
    CHECK(doc["endpoint_residual"].get<double>() < 1e-6);
}

TEST_CASE("ensemble dataset") {
    const auto result = run_cli("ensemble");
    REQUIRE(result.exit_code == 0);
    const auto csv = parse_csv(result.output);
    CHECK(csv.rows.size() == 3 * 200);  // three default temperatures

    // Footer reports the room-temperature transition band.
    bool found = false;
    for (const auto& footer : csv.footers) {
        if (footer.find("temperature_k=293") == std::string::npos) continue;
        found = true;
        const auto lo_pos = footer.find("n_lo=");
        const auto hi_pos = footer.find("n_hi=");
        REQUIRE(lo_pos != std::string::npos);
        REQUIRE(hi_pos != std::string::npos);
        const int n_lo = std::atoi(footer.c_str() + lo_pos + 5);
        const int n_hi = std::atoi(footer.c_str() + hi_pos + 5);
        CHECK(n_lo >= 8);
        CHECK(n_lo <= 14);
        CHECK(n_hi >= 80);
        CHECK(n_hi <= 120);
    }
    CHECK(found);

    const auto single = run_cli("ensemble --temps 500 --n-max 50");
    REQUIRE(single.exit_code == 0);
    CHECK(parse_csv(single.output).rows.size() == 50);

    CHECK(run_cli("ensemble --temps -10").exit_code == 2);

    const auto as_json = run_cli("ensemble --n-max 20 --format json");
    REQUIRE(as_json.exit_code == 0);
    check_against_schema("ensemble.schema.json", json::parse(as_json.output));
}

TEST_CASE("baseline and compare ladders") {
    const auto result = run_cli("baseline --n-max 5");
    REQUIRE(result.exit_code == 0);
    const auto csv = parse_csv(result.output);
    REQUIRE(csv.rows.size() == 5);
    double prev_standard = -1e9, prev_dynamic = 1e9;
    for (size_t i = 0; i < csv.rows.size(); ++i) {
        const double standard = num_at(csv, i, "standard_energy_ev");
        const double dynamic = num_at(csv, i, "dynamic_energy_ev");
        CHECK(standard < 0.0);
        CHECK(dynamic > 0.0);
        CHECK(standard > prev_standard);  // both ladders head to zero
        CHECK(dynamic < prev_dynamic);
        prev_standard = standard;
        prev_dynamic = dynamic;
    }

    const auto compare = run_cli("compare --n-max 5");
    REQUIRE(compare.exit_code == 0);
    const auto ccsv = parse_csv(compare.output);
    double zero_full = -1.0, zero_mech = -1.0;
    for (const auto& footer : ccsv.footers) {
        if (footer.rfind("zero_radius_full_m,", 0) == 0)
            zero_full = std::strtod(footer.c_str() + 19, nullptr);
        if (footer.rfind("zero_radius_mechanical_m,", 0) == 0)
            zero_mech = std::strtod(footer.c_str() + 25, nullptr);
    }
    CHECK(zero_full == 0.0);
    CHECK(zero_mech == doctest::Approx(1.058e-10).epsilon(1e-3));

    check_against_schema("baseline.schema.json",
                         json::parse(run_cli("baseline --format json").output));
    check_against_schema("compare.schema.json",
                         json::parse(run_cli("compare --format json").output));
}

TEST_CASE("bulk and nuclear reports") {
    const auto bulk = run_cli("bulk");
    REQUIRE(bulk.exit_code == 0);
    const auto bcsv = parse_csv(bulk.output);
    REQUIRE(bcsv.rows.size() == 2);
    CHECK(num_at(bcsv, 0, "occupied_volume_l") == doctest::Approx(8.38e-3).epsilon(2e-2));
    CHECK(num_at(bcsv, 0, "atom_count") == doctest::Approx(5.37e22).epsilon(1e-2));
    CHECK(num_at(bcsv, 1, "occupied_volume_l") == doctest::Approx(6.59).epsilon(2e-2));

    const auto nuclear = run_cli("nuclear");
    REQUIRE(nuclear.exit_code == 0);
    const auto ncsv = parse_csv(nuclear.output);
    const size_t value_col = column(ncsv, "value");
    double intensity = 0.0, r_el = 0.0;
    for (const auto& row : ncsv.rows) {
        if (row.at(0) == "field_intensity")
            intensity = std::strtod(row.at(value_col).c_str(), nullptr);
        if (row.at(0) == "r_n_electrostatic")
            r_el = std::strtod(row.at(value_col).c_str(), nullptr);
    }
    CHECK(intensity == doctest::Approx(5.78e-15).epsilon(2e-2));
    CHECK(r_el == doctest::Approx(3.05e-11).epsilon(5e-2));

    check_against_schema("bulk.schema.json", json::parse(run_cli("bulk --format json").output));
    check_against_schema("nuclear.schema.json",
                         json::parse(run_cli("nuclear --format json").output));
}

TEST_CASE("identical invocations are byte identical") {
    const std::vector<std::string> invocations{"calibrate",
                                               "spectrum --n 2 --n-max 6 --format json",
                                               "ensemble --n-max 40 --seed 7",
                                               "decay-trace --steps 10000"};
    for (const auto& args : invocations) {
        const auto first = run_cli(args);
        const auto second = run_cli(args);
        REQUIRE(first.exit_code == 0);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.output == second.output);
    }
}

TEST_CASE("output file matches standard output") {
    const std::string path = "cli_test_calibrate_out.csv";
    const auto to_stdout = run_cli("calibrate");
    const auto to_file = run_cli("calibrate --out " + path);
    REQUIRE(to_file.exit_code == 0);
    CHECK(to_file.output.empty());
    std::ifstream f(path, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == to_stdout.output);
    std::remove(path.c_str());
}
