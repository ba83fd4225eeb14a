#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "ghzsim/emit.hpp"
#include "json.hpp"

using namespace ghzsim;

namespace {

sweep_record make_record(double tau, double p, std::vector<double> values) {
    sweep_record rec;
    rec.tau = tau;
    rec.topo = topology::com;
    rec.p = p;
    rec.g = 1e-2;
    rec.alpha = 3.0;
    rec.values = std::move(values);
    return rec;
}

std::vector<sweep_record> sample_records() {
    return {make_record(0.0, 1.0, {1.0, 0.5}),
            make_record(1.0, 1.0, {1.0 / 3.0, 0.25}),
            make_record(2.0, 1.0, {0.1, 0.125})};
}

const std::vector<std::string> two_measures{"negativity", "ew1"};

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("emit") {

TEST_CASE("csv layout") {
    std::string csv = format_csv(sample_records(), two_measures);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "tau,topology,p,g,alpha,negativity,ew1");
    std::getline(lines, line);
    CHECK(line == "0,com,1,0.01,3,1,0.5");
    std::getline(lines, line);
    // twelve significant digits
    CHECK(line == "1,com,1,0.01,3,0.333333333333,0.25");
    std::getline(lines, line);
    CHECK(line == "2,com,1,0.01,3,0.1,0.125");
    CHECK_FALSE(std::getline(lines, line));
    CHECK(csv.back() == '\n');
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("json round trip") {
    auto records = sample_records();
    auto parsed = nlohmann::json::parse(format_json(records, two_measures));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[0]["topology"] == "com");
    CHECK(parsed[0]["tau"].get<double>() == doctest::Approx(0.0));
    CHECK(parsed[1]["negativity"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
    CHECK(parsed[2]["ew1"].get<double>() == doctest::Approx(0.125).epsilon(1e-11));
    CHECK(parsed[2]["alpha"].get<double>() == doctest::Approx(3.0));
}

TEST_CASE("svg structure") {
    auto records = sample_records();
    // a second parameter group doubles the series count
    for (const auto& rec : sample_records()) {
        sweep_record copy = rec;
        copy.p = 0.5;
        records.push_back(copy);
    }
    std::string svg = format_svg(records, two_measures);
    CHECK(svg.rfind("<?xml version=\"1.0\"", 0) == 0);
    CHECK(svg.find("<svg xmlns=") != std::string::npos);
    CHECK(count_occurrences(svg, "<polyline ") == 4);
    CHECK(svg.find(">tau</text>") != std::string::npos);
    CHECK(svg.find(">value</text>") != std::string::npos);
    // only the varying parameter shows up in the legend
    CHECK(svg.find("p=0.5") != std::string::npos);
    CHECK(svg.find("alpha=") == std::string::npos);
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
}

TEST_CASE("emit writes the same bytes as the formatter") {
    run_config cfg;
    cfg.measures = two_measures;
    cfg.out = "/tmp/ghzsim_emit_test.csv";
    auto records = sample_records();
    emit(records, cfg);
    CHECK(slurp(cfg.out) == format_csv(records, two_measures));
    std::remove(cfg.out.c_str());
}

TEST_CASE("emit failures") {
    run_config cfg;
    cfg.measures = two_measures;
    cfg.out = "/nonexistent_dir_xyz/out.csv";
    auto records = sample_records();
    CHECK_THROWS_AS(emit(records, cfg), io_error);

    CHECK_THROWS_AS(format_csv({}, two_measures), std::invalid_argument);
    auto short_values = sample_records();
    short_values[1].values.pop_back();
    CHECK_THROWS_AS(format_csv(short_values, two_measures), std::invalid_argument);
    CHECK_THROWS_AS(format_json(short_values, two_measures), std::invalid_argument);
    CHECK_THROWS_AS(format_svg({}, two_measures), std::invalid_argument);
}

}  // TEST_SUITE
