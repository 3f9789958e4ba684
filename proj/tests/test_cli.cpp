#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "ilab/cli.hpp"
#include "ilab/parse.hpp"
#include "ilab/reproduce.hpp"

using namespace ilab;

namespace {

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str() + err.str();
    return code;
}

Json last_json(const std::string& text) {
    size_t brace;
    if (!text.empty() && text[0] == '{') {
        brace = 0;
    } else {
        auto pos = text.find("\n{");
        REQUIRE(pos != std::string::npos);
        brace = pos + 1;
    }
    return Json::parse(text.substr(brace));
}

}  // namespace

TEST_CASE("polynomial parsing") {
    BiPoly s3 = parse_poly("x^3 + t*x + t - 1");
    CHECK(s3 == BiPoly({IntPoly{-1, 1}, IntPoly{0, 1}, IntPoly{}, IntPoly{1}}));
    CHECK(parse_poly("x") == BiPoly({IntPoly{}, IntPoly{1}}));
    CHECK(parse_poly("  - 3 ") == BiPoly::from_univariate_in_x(IntPoly{-3}));
    CHECK(parse_poly("(x + 1)*(x - 1)") == BiPoly({IntPoly{-1}, IntPoly{}, IntPoly{1}}));
    CHECK(parse_poly("y^2 + 3*v") == BiPoly({IntPoly{0, 3}, IntPoly{}, IntPoly{1}}));
    CHECK(parse_poly("2^10") == BiPoly::from_univariate_in_x(IntPoly{1024}));

    CHECK_THROWS_AS(parse_poly("x^2 +"), SyntaxError);
    try {
        parse_poly("x^2 +");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 5);
    }
    CHECK_THROWS_AS(parse_poly("x^2 + u"), UnknownVariable);
    CHECK_THROWS_AS(parse_poly("x^"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("(x"), SyntaxError);
    CHECK_THROWS_AS(parse_poly(""), SyntaxError);
}

TEST_CASE("print/parse round trip") {
    for (const auto& pre : presets()) {
        BiPoly f = pre.poly();
        CHECK(parse_poly(to_string(f, "x", pre.param == "v" ? "v" : "t")) == f);
    }
    BiPoly nd = normalized_derivative(find_preset("a5")->poly());
    CHECK(parse_poly(to_string(nd, "y", "v")) == nd);

    std::mt19937_64 rng(0x90117);
    for (int it = 0; it < 50; ++it) {
        std::vector<IntPoly> xc;
        int n = 1 + (int)(rng() % 5);
        for (int i = 0; i <= n; ++i) {
            std::vector<Int> c;
            for (int j = 0; j <= (int)(rng() % 3); ++j)
                c.emplace_back((long)(rng() % 41) - 20);
            xc.emplace_back(std::move(c));
        }
        BiPoly f(std::move(xc));
        if (f.is_zero()) continue;
        CHECK(parse_poly(to_string(f)) == f);
    }
}

TEST_CASE("presets parse to the expected polynomials") {
    const Preset* s3 = find_preset("s3");
    REQUIRE(s3);
    CHECK(s3->poly() == BiPoly({IntPoly{-1, 1}, IntPoly{0, 1}, IntPoly{}, IntPoly{1}}));

    const Preset* a5 = find_preset("a5");
    REQUIRE(a5);
    CHECK(a5->poly() == BiPoly({IntPoly{-24, 9}, IntPoly{25, -3}, IntPoly{0, 1}, IntPoly{-10},
                                IntPoly{}, IntPoly{1}}));

    const Preset* p27 = find_preset("psl27");
    REQUIRE(p27);
    CHECK(p27->poly().deg_x() == 7);
    CHECK(p27->poly().monic_in_x());
    CHECK(p27->poly().specialize(0) == IntPoly{-1, -12, 191, -333, 163, 0, -10, 1});

    const Preset* p33 = find_preset("psl33");
    REQUIRE(p33);
    CHECK(p33->poly().deg_x() == 13);
    CHECK(p33->poly().monic_in_x());
    CHECK(p33->poly().deg_t() == 1);

    CHECK(find_preset("nope") == nullptr);
}

TEST_CASE("gate command emits a schema-valid deterministic report") {
    std::string text1, text2;
    CHECK(run({"gate", "--preset", "s3", "--seed", "7"}, &text1) == 0);
    CHECK(run({"gate", "--preset", "s3", "--seed", "7"}, &text2) == 0);
    Json j1 = last_json(text1), j2 = last_json(text2);
    std::string err;
    CHECK(validate_report(j1, &err));
    CHECK(err.empty());
    j1.erase("wall_ms");
    j2.erase("wall_ms");
    j1.erase("timestamp");
    j2.erase("timestamp");
    CHECK(j1.dump() == j2.dump());
    CHECK(j1["results"]["gate"]["progression"]["a"] == "2");
    CHECK(j1["results"]["gate"]["progression"]["b"] == "6");
    CHECK(j1["results"]["gate"]["N"] == "1");
}

TEST_CASE("scan command writes certificates to a json file") {
    std::string path = "/tmp/ilab_test_scan.json";
    std::string text;
    CHECK(run({"scan", "--preset", "s3", "--count", "2", "--json", path}, &text) == 0);
    std::ifstream is(path);
    REQUIRE(is.good());
    Json j = Json::parse(is);
    std::string err;
    CHECK(validate_report(j, &err));
    REQUIRE(j["results"]["certificates"].size() == 2);
    for (const auto& cert : j["results"]["certificates"]) {
        CHECK(cert["support_check_passed"] == true);
        CHECK(cert["irreducible"]["status"] == "certified");
    }
}

TEST_CASE("certify and galois commands") {
    std::string text;
    CHECK(run({"certify", "--preset", "s3", "--c", "2"}, &text) == 0);
    Json j = last_json(text);
    CHECK(j["results"]["certificate"]["disc"]["value"] == "-59");
    CHECK(j["results"]["certificate"]["twist"] == "-59");

    CHECK(run({"galois", "--preset", "s3", "--c", "-1", "--prime-budget", "50"}, &text) == 0);
    Json g = last_json(text);
    CHECK(g["results"]["verdict"]["surviving"] == Json::array({"S3"}));
}

TEST_CASE("usage errors exit with code 2") {
    std::string text;
    CHECK(run({}, &text) == 2);
    CHECK(run({"gate"}, &text) == 2);                      // missing input
    CHECK(run({"gate", "--preset", "zzz"}, &text) == 2);   // unknown preset
    CHECK(run({"frobnicate"}, &text) == 2);                // unknown command
    CHECK(run({"certify", "--preset", "s3"}, &text) == 2); // missing --c
}

TEST_CASE("poly-file input and non-monic rejection") {
    std::string path = "/tmp/ilab_test_poly.txt";
    {
        std::ofstream os(path);
        os << "2*x^3 + t*x + 1";
    }
    std::string text;
    CHECK(run({"gate", "--poly-file", path}, &text) == 1);
    CHECK(text.find("monic") != std::string::npos);
    {
        std::ofstream os(path);
        os << "x^3 + t*x + t - 1";
    }
    CHECK(run({"gate", "--poly-file", path}, &text) == 0);
}

TEST_CASE("reproduce s3 is fully green") {
    std::string text;
    CHECK(run({"reproduce", "s3"}, &text) == 0);
    CHECK(text.find("[FAIL]") == std::string::npos);
}

TEST_CASE("shipped schema file matches the embedded schema") {
    std::ifstream is(std::string(ILAB_SOURCE_DIR) + "/schemas/report.schema.json");
    REQUIRE(is.good());
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    CHECK(text == report_schema_text());
    // and the file itself parses as the validator's schema
    Json schema = Json::parse(text);
    CHECK(schema["type"] == "object");
}

TEST_CASE("json round trip is idempotent") {
    std::string text;
    REQUIRE(run({"gate", "--preset", "a5"}, &text) == 0);
    Json j = last_json(text);
    Json reloaded = Json::parse(j.dump(2));
    CHECK(reloaded == j);
    CHECK(reloaded.dump(2) == j.dump(2));
}
