#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace hbtest;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string command = std::string(HODGEBLOCKS_CLI_PATH) + " " + args;
    command += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<json> json_lines(const std::string& text) {
    std::vector<json> records;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        if (!line.empty()) records.push_back(json::parse(line));
    }
    return records;
}

}  // namespace

TEST_CASE("compute: json record") {
    const CliResult res = run_cli("compute --r 5 --s 3 --genus 0 --colors 2,2,2,2 --format json");
    REQUIRE(res.exit_code == 0);
    const json record = json::parse(res.output);
    CHECK(record["r"] == 5);
    CHECK(record["s"] == 3);
    CHECK(record["genus"] == 0);
    CHECK(record["colors"] == json::array({2, 2, 2, 2}));
    CHECK(record["output_color"].is_null());
    CHECK(record["weight"] == "4");
    CHECK(record["polynomial"] == "u*v^3 + u^2*v^2");
    CHECK(record["dimension"] == "2");
    CHECK(record["signature"] == "0");
    CHECK(record["type2_gap"] == false);
    CHECK(record["formal_value"] == false);
    REQUIRE(record["terms"].size() == 2);
    CHECK(record["terms"][0] == json({{"p", 1}, {"q", 3}, {"c", "1"}}));
    CHECK(record["terms"][1] == json({{"p", 2}, {"q", 2}, {"c", "1"}}));
}

TEST_CASE("compute: empty color list means n = 0") {
    const CliResult res = run_cli("compute --r 5 --s 3 --genus 1 --colors \"\" --format json");
    REQUIRE(res.exit_code == 0);
    const json record = json::parse(res.output);
    CHECK(record["polynomial"] == "4");
    CHECK(record["dimension"] == "4");
    CHECK(record["colors"] == json::array());
}

TEST_CASE("compute: output color") {
    const CliResult res = run_cli("compute --r 5 --s 3 --genus 0 --colors 2,2 --output-color 2 --format json");
    REQUIRE(res.exit_code == 0);
    const json record = json::parse(res.output);
    CHECK(record["polynomial"] == "v");
    CHECK(record["output_color"] == 2);
    CHECK(record["signature"].is_null());
    CHECK(record["weight"] == "1");
}

TEST_CASE("compute: csv output") {
    const CliResult res = run_cli("compute --r 5 --s 3 --genus 0 --colors 2,2,2,2 --format csv");
    REQUIRE(res.exit_code == 0);
    std::istringstream stream(res.output);
    std::string header, row;
    std::getline(stream, header);
    std::getline(stream, row);
    CHECK(header == "r,s,genus,colors,weight,dimension,signature,polynomial");
    CHECK(row == "5,3,0,\"2,2,2,2\",4,2,0,\"u*v^3 + u^2*v^2\"");
}

TEST_CASE("compute: invalid hypotheses exit with code 2 and name the violation") {
    const CliResult even_r = run_cli("compute --r 4 --s 1 --genus 0 --colors \"\"", /*merge_stderr=*/true);
    CHECK(even_r.exit_code == 2);
    CHECK(even_r.output.find("odd") != std::string::npos);

    const CliResult bad_s = run_cli("compute --r 9 --s 3 --genus 0 --colors \"\"", /*merge_stderr=*/true);
    CHECK(bad_s.exit_code == 2);
    CHECK(bad_s.output.find("prime to r") != std::string::npos);

    const CliResult bad_color = run_cli("compute --r 5 --s 3 --genus 0 --colors 7", /*merge_stderr=*/true);
    CHECK(bad_color.exit_code == 2);

    const CliResult junk_color = run_cli("compute --r 5 --s 3 --colors 2,x", /*merge_stderr=*/true);
    CHECK(junk_color.exit_code == 2);

    const CliResult bad_flag = run_cli("compute --r 5 --nonsense", /*merge_stderr=*/true);
    CHECK(bad_flag.exit_code == 2);
}

TEST_CASE("compute: text format mentions formal values") {
    const CliResult res = run_cli("compute --r 5 --s 3 --genus 0 --colors \"\"");
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("formal value") != std::string::npos);
    CHECK(res.output.find("polynomial: 1") != std::string::npos);
}

TEST_CASE("table: deterministic small enumeration") {
    const CliResult res = run_cli("table --r 3 --s 1 --genus-max 0 --n-max 2 --format json");
    REQUIRE(res.exit_code == 0);
    const auto records = json_lines(res.output);
    REQUIRE(records.size() == 4);
    CHECK(records[0]["colors"] == json::array());
    CHECK(records[1]["colors"] == json::array({0}));
    CHECK(records[2]["colors"] == json::array({0, 0}));
    CHECK(records[3]["colors"] == json::array({1, 1}));
    for (const auto& record : records) {
        long long sum = 0;
        for (const auto& c : record["colors"]) sum += c.get<long long>();
        CHECK(sum % 2 == 0);
    }
}

TEST_CASE("table: includes the pascal row") {
    const CliResult res = run_cli("table --r 5 --s 3 --genus-max 1 --n-max 4 --format json");
    REQUIRE(res.exit_code == 0);
    bool found = false;
    for (const auto& record : json_lines(res.output)) {
        if (record["genus"] == 0 && record["colors"] == json::array({2, 2, 2, 2})) {
            found = true;
            CHECK(record["polynomial"] == "u*v^3 + u^2*v^2");
        }
    }
    CHECK(found);
}

TEST_CASE("table: --ordered enumerates permutations separately") {
    const CliResult res = run_cli("table --r 5 --s 3 --genus-max 0 --n-max 2 --ordered --format json");
    REQUIRE(res.exit_code == 0);
    bool saw_02 = false, saw_20 = false;
    json poly_02, poly_20;
    for (const auto& record : json_lines(res.output)) {
        if (record["colors"] == json::array({0, 2})) {
            saw_02 = true;
            poly_02 = record["polynomial"];
        }
        if (record["colors"] == json::array({2, 0})) {
            saw_20 = true;
            poly_20 = record["polynomial"];
        }
    }
    REQUIRE((saw_02 && saw_20));
    CHECK(poly_02 == poly_20);
}

TEST_CASE("table: csv has the fixed header and matches json content") {
    const CliResult csv = run_cli("table --r 5 --s 3 --genus-max 1 --n-max 3 --format csv");
    const CliResult js = run_cli("table --r 5 --s 3 --genus-max 1 --n-max 3 --format json");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(js.exit_code == 0);
    std::istringstream stream(csv.output);
    std::string line;
    std::getline(stream, line);
    CHECK(line == "r,s,genus,colors,weight,dimension,signature,polynomial");
    std::vector<std::string> rows;
    while (std::getline(stream, line))
        if (!line.empty()) rows.push_back(line);
    const auto records = json_lines(js.output);
    REQUIRE(rows.size() == records.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string dim = records[i]["dimension"].get<std::string>();
        const std::string sig = records[i]["signature"].get<std::string>();
        CHECK(rows[i].find("," + dim + "," + sig + ",") != std::string::npos);
    }
}

TEST_CASE("triangle fixture") {
    const CliResult res = run_cli("triangle --n-max 6");
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("n=2:  1   dim=1  signature=-1") != std::string::npos);
    CHECK(res.output.find("n=3:  1   dim=1  signature=1") != std::string::npos);
    CHECK(res.output.find("n=4:  1 1   dim=2  signature=0") != std::string::npos);
    CHECK(res.output.find("n=5:  1 2   dim=3  signature=-1") != std::string::npos);
    CHECK(res.output.find("n=6:  1 3 1   dim=5  signature=1") != std::string::npos);
}

TEST_CASE("selftest quick passes via the binary") {
    const CliResult res = run_cli("selftest --depth quick");
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("selftest passed") != std::string::npos);
}

TEST_CASE("in-process rendering is deterministic") {
    for (const OutputFormat format : {OutputFormat::json, OutputFormat::csv}) {
        std::ostringstream first, second;
        cmd_table(7, 3, 1, 3, false, format, first);
        cmd_table(7, 3, 1, 3, false, format, second);
        CHECK(first.str() == second.str());
        CHECK_FALSE(first.str().empty());
    }
}

TEST_CASE("record polynomials parse back to the same value") {
    auto rng = make_rng(40);
    const ModelParams params{7, 5};
    const FrobeniusAlgebra algebra = build_algebra(params);
    std::uniform_int_distribution<int> genus(0, 2), n(0, 4), color(0, algebra.rank() - 1);
    for (int i = 0; i < 40; ++i) {
        SurfaceDatum d{genus(rng), {}, std::nullopt};
        for (int j = n(rng); j > 0; --j) d.colors.push_back(color(rng));
        const ResultRecord record = make_record(algebra, params, d);
        const json j = record_to_json(record);
        CHECK(parse_laurent(j["polynomial"].get<std::string>()) == record.result.polynomial);
        Int dim_from_terms = 0;
        for (const auto& term : j["terms"]) dim_from_terms += Int(term["c"].get<std::string>());
        CHECK(dim_from_terms == record.result.dimension);
    }
}

TEST_CASE("formal-value flag follows tangent stability") {
    const ModelParams params{5, 3};
    const FrobeniusAlgebra algebra = build_algebra(params);
    CHECK(make_record(algebra, params, {0, {}, std::nullopt}).formal_value);
    CHECK(make_record(algebra, params, {0, {2}, std::nullopt}).formal_value);
    CHECK(make_record(algebra, params, {1, {}, std::nullopt}).formal_value);
    CHECK_FALSE(make_record(algebra, params, {0, {2, 2}, std::nullopt}).formal_value);
    CHECK_FALSE(make_record(algebra, params, {1, {2}, std::nullopt}).formal_value);
    CHECK_FALSE(make_record(algebra, params, {2, {}, std::nullopt}).formal_value);
    CHECK_FALSE(make_record(algebra, params, {0, {2}, 2}).formal_value);  // output color counts as a marked point
}
