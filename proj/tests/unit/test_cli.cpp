#include "qgcat/category/premodular.hpp"
#include "qgcat/cli/app.hpp"
#include "qgcat/cli/serialize.hpp"
#include "qgcat/error.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qgcat;
using cli::json;

namespace {

struct Result {
    int status;
    std::string out, err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
    auto r = run(args);
    REQUIRE_MESSAGE(r.status == 0, r.err);
    return json::parse(r.out);
}

} // namespace

TEST_CASE("cli: rationals") {
    CHECK(cli::rational_string(mpq_class(3)) == "3/1");
    CHECK(cli::rational_string(mpq_class(-5, 2)) == "-5/2");
    CHECK(cli::parse_rational("6/4") == mpq_class(3, 2));
    CHECK(cli::parse_rational("-7") == mpq_class(-7));
    CHECK_THROWS_AS(cli::parse_rational("1/0"), ArgumentError);
    CHECK_THROWS_AS(cli::parse_rational("x/2"), ArgumentError);
    CHECK(cli::parse_level_range("9..19") == std::pair{9, 19});
    CHECK(cli::parse_level_range("7") == std::pair{7, 7});
    CHECK_THROWS_AS(cli::parse_level_range("9..7"), ArgumentError);
    CHECK_THROWS_AS(cli::parse_level_range("9.."), ArgumentError);
}

TEST_CASE("cli: cyclotomic numbers round-trip exactly") {
    lie::RootSystem rs(lie::LieType::parse("B2"));
    auto d = category::build_premodular(rs, 9, 5);
    for (const auto& x : d.dims) {
        json j = cli::cyclo_to_json(x, 12);
        CHECK(cli::cyclo_from_json(json::parse(j.dump())) == x);
        CHECK(j["coeffs"].size() == static_cast<std::size_t>(x.degree()));
    }
    CHECK_THROWS_AS(cli::cyclo_from_json(json{{"conductor", 5}, {"coeffs", {"1/1", "0/1", "0/1", "0/1", "1/1"}}}),
                    ArgumentError);
    CHECK_THROWS_AS(cli::cyclo_from_json(json{{"coeffs", json::array()}}), ArgumentError);
}

TEST_CASE("cli: category documents round-trip bit for bit") {
    struct Case {
        const char* type;
        int ell, z;
        bool sub;
    };
    for (auto c : {Case{"A2", 5, 2, false}, Case{"A1", 5, 1, true}, Case{"B2", 9, 7, true}, Case{"B2", 9, 1, false},
                   Case{"G2", 13, 3, false}}) {
        CAPTURE(c.type);
        CAPTURE(c.z);
        std::vector<std::string> args{"category", c.type, std::to_string(c.ell), "--z", std::to_string(c.z)};
        if (c.sub) args.push_back("--sub");
        auto r = run(args);
        CHECK(r.status == 0);
        auto parsed = cli::parse_premodular(json::parse(r.out));

        lie::RootSystem rs(lie::LieType::parse(c.type));
        auto d = category::build_premodular(rs, c.ell, c.z);
        if (c.sub) d = category::integer_weight_subcategory(d);
        CHECK(parsed.type == c.type);
        CHECK(parsed.ell == c.ell);
        CHECK(parsed.z == c.z);
        CHECK(parsed.labels == d.labels);
        CHECK(parsed.dims == d.dims);
        CHECK(parsed.twists == d.twists);
        CHECK(parsed.fusion == d.fusion);
        CHECK(parsed.s == d.s);
    }
}

TEST_CASE("cli: alcove listings") {
    CHECK(run_json({"alcove", "A1", "5", "--format", "json"})["labels"].size() == 4);
    CHECK(run_json({"alcove", "B2", "9", "--format", "json"})["labels"].size() == 12);
    CHECK(run_json({"alcove", "G2", "14", "--format", "json"})["labels"].size() == 10);

    auto b2 = run_json({"alcove", "B2", "9", "--format", "json"});
    CHECK(b2["labels"][0]["epsilon"] == json{"0/1", "0/1"});
    CHECK_FALSE(run_json({"alcove", "G2", "14", "--format", "json"})["labels"][0].contains("epsilon"));

    auto csv = run({"alcove", "A1", "5", "--format", "csv"});
    CHECK(csv.status == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 5);
    CHECK(csv.out.rfind("index,fundamental,dim,twist\n", 0) == 0);

    // E types are in scope for labels, dims and twists without --large.
    CHECK(run({"alcove", "E6", "13"}).status == 0);
}

TEST_CASE("cli: S-matrix emission") {
    auto j = run_json({"smatrix", "A1", "5", "--sub", "--format", "json"});
    REQUIRE(j["S"].size() == 2);
    const double phi = (1 + std::sqrt(5.0)) / 2;
    auto approx = [&](int i, int k) { return std::stod(j["S"][i][k]["approx"]["re"].get<std::string>()); };
    CHECK(std::abs(approx(0, 0) - 1) < 1e-10);
    CHECK(std::abs(approx(0, 1) - phi) < 1e-10);
    CHECK(std::abs(approx(1, 0) - phi) < 1e-10);
    CHECK(std::abs(approx(1, 1) + 1) < 1e-10);

    auto b = run_json({"smatrix", "B2", "9", "--sub", "--z", "1", "--format", "json", "--cross-check"});
    CHECK(b["S"].size() == 6);
    CHECK(b["spec"]["conductor"] == 18);

    auto one = run_json({"smatrix", "A2", "3", "--format", "json"});
    CHECK(one["S"].size() == 1);
    CHECK(one["S"][0][0]["coeffs"][0] == "1/1");

    auto table = run({"smatrix", "A1", "5", "--sub", "--digits", "12"});
    CHECK(table.status == 0);
    CHECK(table.out.find("1.618033988750") != std::string::npos);
}

TEST_CASE("cli: verdicts") {
    auto b2 = run_json({"verdict", "B2", "9", "--format", "json"});
    const auto& r = b2["results"][0];
    CHECK(r["modular"] == false);
    CHECK(r["expected"] == "not-modular");
    REQUIRE(r["obstructions"].size() == 2);
    CHECK(r["obstructions"][1]["epsilon"] == json{"5/2", "5/2"});

    auto b3 = run_json({"verdict", "B3", "9", "--z", "1", "--format", "json"});
    CHECK(b3["results"][0]["modular"] == true);
    CHECK(b3["results"][0]["concordant"] == true);

    auto f4 = run_json({"verdict", "F4", "13", "--format", "json"});
    CHECK(f4["results"][0]["expected"] == "unknown");

    auto all = run_json({"verdict", "A2", "5", "--all-z", "--format", "json"});
    CHECK(all["results"].size() == cyclo::admissible_z(5).size());
    for (const auto& x : all["results"]) CHECK(x["concordant"] == true);

    auto sub = run_json({"verdict", "B2", "9", "--sub", "--all-z", "--format", "json"});
    for (const auto& x : sub["results"]) {
        CHECK(x["modular"] == true);
        CHECK(x["expected"] == "modular");
    }
    auto a1 = run_json({"verdict", "A1", "5", "--format", "json"});
    CHECK(a1["results"][0]["unitarity"]["known_unitary"] == true);
    CHECK(a1["results"][0]["unitarity"]["dims_positive"] == true);
}

TEST_CASE("cli: ranks") {
    CHECK(run_json({"rank", "G2", "27", "--format", "json"})["rows"][0]["rank"] == 12);
    CHECK(run_json({"rank", "G2", "14", "--format", "json"})["rows"][0]["rank"] == 10);
    CHECK(run_json({"rank", "E8", "30", "--format", "json"})["rows"][0]["rank"] == 1);
    auto range = run_json({"rank", "B2", "9..19", "--format", "json"});
    CHECK(range["rows"].size() == 11);
    for (const auto& row : range["rows"]) CHECK(row["rank"] == row["alcove"]);
    // Degenerate levels are skipped inside a range but rejected on their own.
    CHECK(run_json({"rank", "G2", "7..12", "--format", "json"})["rows"].size() == 5);
    CHECK(run({"rank", "G2", "9"}).status == cli::exit_status::level);
}

TEST_CASE("cli: exit statuses") {
    using namespace cli::exit_status;
    CHECK(run({}).status == argument);
    CHECK(run({"alcove"}).status == argument);
    CHECK(run({"alcove", "X3", "5"}).status == argument);
    CHECK(run({"alcove", "A1", "5", "--format", "xml"}).status == argument);
    CHECK(run({"alcove", "A1", "5", "--z", "5"}).status == argument);
    CHECK(run({"alcove", "A1", "five"}).status == argument);
    CHECK(run({"alcove", "A1", "5..7"}).status == argument);
    CHECK(run({"category", "A1", "5", "--format", "csv"}).status == argument);
    CHECK(run({"alcove", "A1", "1"}).status == level);
    CHECK(run({"smatrix", "E6", "13"}).status == level);
    CHECK(run({"smatrix", "A3", "6", "--sub"}).status == level);
    CHECK(run({"smatrix", "A3", "7", "--cross-check", "--weyl-limit", "10"}).status == capacity);
    CHECK(run({"category", "A1", "5", "-o", "/nonexistent-dir/out.json"}).status == io);
    CHECK(run({"--help"}).status == ok);

    CHECK(cli::exit_status_for(ErrorKind::invariant) == invariant);
    CHECK(cli::exit_status_for(ErrorKind::division_by_zero) == invariant);
    CHECK(cli::exit_status_for(ErrorKind::modularity) == level);
    CHECK(cli::exit_status_for(ErrorKind::precision) == argument);
    CHECK(cli::exit_status_for(ErrorKind::capacity) == capacity);

    const auto path = std::filesystem::temp_directory_path() / "qgcat_cli_test.json";
    auto r = run({"category", "A1", "5", "-o", path.string()});
    CHECK(r.status == ok);
    CHECK(r.out.empty());
    std::ifstream in(path);
    CHECK(cli::parse_premodular(json::parse(in)).s.size() == 4);
    std::filesystem::remove(path);
}

TEST_CASE("cli: decimal rounding of numeric companions") {
    CHECK(cli::round_decimal("1.61803398874989", 12) == "1.618033988750");
    CHECK(cli::round_decimal("-0.0000000000004", 12) == "0.000000000000");
    CHECK(cli::round_decimal("9.9996", 3) == "10.000");
    CHECK(cli::round_decimal("-2.5", 0) == "-3");
    CHECK(cli::round_decimal("0.5", 2) == "0.50");
    CHECK_THROWS_AS(cli::round_decimal("1e5", 2), ArgumentError);
}
