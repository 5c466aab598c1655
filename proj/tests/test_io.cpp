#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "ginipca/errors.hpp"
#include "ginipca/io.hpp"
#include "ginipca/report.hpp"
#include "ginipca/svg.hpp"
#include "support.hpp"

using namespace ginipca;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("ginipca_io_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

template <class F>
ParseError parse_error_of(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected ParseError");
    return ParseError("unreachable");
}

}  // namespace

TEST_CASE("cars dataset") {
    const auto cars = cars_dataset();
    CHECK(cars.n_obs() == 24);
    CHECK(cars.n_vars() == 6);
    CHECK(cars.column_names == std::vector<std::string>{"capacity", "power", "speed", "weight", "width", "length"});
    CHECK(cars.row_labels.front() == "Citroën C2 1.1 Base");
    auto row_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < cars.n_obs(); ++i)
            if (cars.row_labels[i] == name) return cars.values.row(i);
        FAIL("missing row " << name);
        return std::vector<double>{};
    };
    CHECK(row_of("Ferrari Enzo") == std::vector<double>{5998, 660, 350, 1365, 2650, 4700});
    CHECK(row_of("Smart Fortwo Coupé") == std::vector<double>{698, 52, 135, 730, 1515, 2500});
    CHECK(cars.values(0, 0) == 1124);
}

TEST_CASE("CSV parsing") {
    const auto x = parse_csv("name,a,b\nr1,1,2.5\n\"r,2\",-3e2,+4\r\n\n", true);
    CHECK(x.n_obs() == 2);
    CHECK(x.row_labels == std::vector<std::string>{"r1", "r,2"});
    CHECK(x.column_names == std::vector<std::string>{"a", "b"});
    CHECK(x.values(1, 0) == -300);
    CHECK(x.values(1, 1) == 4);

    const auto single = parse_csv("only\n1\n2\n3\n", false);
    CHECK(single.n_vars() == 1);
    CHECK(single.n_obs() == 3);
    CHECK(single.row_labels == std::vector<std::string>{"1", "2", "3"});

    CHECK(parse_csv("\xEF\xBB\xBFx,y\n1,2\n3,4\n", false).column_names[0] == "x");
    CHECK(detect_row_labels(",a\nfoo,1\n"));
    CHECK(detect_row_labels("id,a\nfoo,1\n"));
    CHECK_FALSE(detect_row_labels("a,b\n1,2\n"));
}

TEST_CASE("CSV errors carry positions") {
    auto e = parse_error_of([] { parse_csv("a,b\n1,2\n3,oops\n", false); });
    CHECK(e.row() == 3);
    CHECK(e.column() == 2);
    CHECK(std::string(e.what()).find("row 3, column 2") != std::string::npos);

    e = parse_error_of([] { parse_csv("a,b\n1,2\n3\n", false); });
    CHECK(e.row() == 3);
    e = parse_error_of([] { parse_csv("a,a\n1,2\n", false); });
    CHECK(e.row() == 1);
    CHECK(e.column() == 2);
    parse_error_of([] { parse_csv("a,b\n", false); });
    parse_error_of([] { parse_csv("a,b\n1,\n", false); });
    parse_error_of([] { parse_csv("a,b\n1,nan\n", false); });
    parse_error_of([] { load_csv("/nonexistent/file.csv", false); });
}

TEST_CASE("numbers parse without locale") {
    double v = 0;
    CHECK(parse_number(" 1.5 ", v));
    CHECK(v == 1.5);
    CHECK(parse_number("+2e3", v));
    CHECK(v == 2000);
    CHECK_FALSE(parse_number("1,5", v));
    CHECK_FALSE(parse_number("inf", v));
    CHECK_FALSE(parse_number("", v));
    CHECK_FALSE(parse_number("1.5x", v));
}

TEST_CASE("CSV round trip is value-identical") {
    CounterRng rng(71, 0);
    auto x = DataMatrix::from_values(test_support::random_matrix(rng, 17, 3));
    x.values(0, 0) = 1e-300;
    x.values(1, 1) = -123456789.123456789;
    x.row_labels[2] = "quoted, \"label\"";
    const auto dir = scratch("roundtrip");
    save_csv(x, dir / "x.csv");
    const auto y = load_csv(dir / "x.csv", true);
    CHECK(y.values == x.values);
    CHECK(y.row_labels == x.row_labels);
    CHECK(y.column_names == x.column_names);
    CHECK(parse_csv(to_csv(x, false), false).values == x.values);
}

TEST_CASE("report files") {
    ReportOptions o;
    o.nus = {2, 4};
    o.significance = true;
    const auto bundle = build_report(cars_dataset(), o);
    REQUIRE(bundle.methods.size() == 3);
    const auto dir = scratch("report");
    const auto paths = write_report(bundle, dir, {true, true, true});
    for (const char* f : {"eigen.csv", "eigen.json", "report.json", "act_gini_2.csv", "rct_gini_4.csv",
                          "projection_variance.csv", "significance_gini_2.csv", "projection_gini_2.svg",
                          "act_gini_4_axis2.svg"})
        CHECK_MESSAGE(fs::exists(dir / f), f);
    CHECK(paths.size() >= 9);

    const std::string eigen = slurp(dir / "eigen.csv");
    CHECK(eigen.rfind("axis,gini_2,gini_4,variance\n1,80.35797", 0) == 0);

    const auto act = load_csv(dir / "act_gini_2.csv", true);
    CHECK(act.row_labels == cars_dataset().row_labels);
    CHECK(act.column_names.size() == 6);
    double s = 0;
    for (double v : act.values.col(0)) s += v;
    CHECK(s == doctest::Approx(1.0).epsilon(1e-8));

    const auto j = nlohmann::json::parse(slurp(dir / "report.json"));
    CHECK(j["metadata"]["n_obs"] == 24);
    CHECK(j["metadata"]["tool_version"] == kToolVersion);
    CHECK(j["methods"][0]["label"] == "gini_2");
    CHECK(j["methods"][2]["nu"].is_null());
    CHECK(j["row_labels"][0] == "Citroën C2 1.1 Base");
    CHECK(j["methods"][1]["shares_percent"][5].get<double>() < 0);
    CHECK(j["methods"][0]["significance"]["z"].size() == 2);

    const std::string sig = slurp(dir / "significance_gini_2.csv");
    CHECK(sig.find("2,weight,") != std::string::npos);
}

TEST_CASE("plots do not alter the numbers") {
    ReportOptions o;
    o.nus = {2};
    o.variance = false;
    const auto bundle = build_report(cars_dataset(), o);
    const auto a = scratch("plots_a");
    const auto b = scratch("plots_b");
    write_report(bundle, a, {true, true, false});
    write_report(bundle, b, {true, true, true});
    CHECK(slurp(a / "report.json") == slurp(b / "report.json"));
    CHECK(slurp(a / "act_gini_2.csv") == slurp(b / "act_gini_2.csv"));
    const std::string svg = slurp(b / "act_gini_2_axis1.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("Citro") != std::string::npos);
}

TEST_CASE("svg helpers") {
    CHECK(svg::escape("a<b & \"c\"") == "a&lt;b &amp; &quot;c&quot;");
    const std::vector<double> x{1, 2, 3}, y{3, 1, 2};
    const std::string s = svg::scatter(x, y, {"p", "q", "r<"}, {"t", "x", "y"});
    CHECK(s.find("r&lt;") != std::string::npos);
    const std::string bars = svg::bar_chart(x, {"a", "b", "c"}, 2.0, "bars");
    CHECK(bars.find("</svg>") != std::string::npos);
}

TEST_CASE("simulation config JSON") {
    auto j = nlohmann::json::parse(R"({"preset": "dispersed", "n_obs": 80, "theta_grid": {"start": 1, "stop": 31, "step": 10},
                                        "nus": [2, 3], "seed": 7, "rho_repair": "upper"})");
    const auto c = sim_config_from_json(j);
    CHECK(c.rho == SimConfig::dispersed().rho);
    CHECK(c.n_obs == 80);
    CHECK(c.theta_grid == std::vector<double>{1, 11, 21, 31});
    CHECK(c.nus == std::vector<double>{2, 3});
    CHECK(c.seed == 7);
    CHECK(c.rho_repair == RhoRepair::upper);

    const auto echo = sim_config_from_json(to_json(c));
    CHECK(echo.rho == c.rho);
    CHECK(echo.theta_grid == c.theta_grid);

    CHECK_THROWS_AS(sim_config_from_json(nlohmann::json::parse(R"({"preset": "nope"})")), ParseError);
    CHECK_THROWS_AS(sim_config_from_json(nlohmann::json::parse(R"({"rho": [[1, 0]]})")), ParseError);
    CHECK_THROWS_AS(sim_config_from_json(nlohmann::json::parse(R"({"n_obs": "many"})")), ParseError);
}
