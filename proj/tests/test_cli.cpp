#include <doctest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hankelforge/cli.hpp"
#include "hankelforge/json_io.hpp"
#include "hankelforge/symbol_parser.hpp"

using namespace hankelforge;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("hankelforge");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return CliRun{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("symbol grammar") {
    const LaurentPoly p = parse_symbol("z^3 - 1/2 z^5").poly;
    CHECK(p.coeff(3) == Rational(1));
    CHECK(p.coeff(5) == Rational(-1, 2));
    CHECK(p.terms().size() == 2);

    CHECK(parse_symbol("2").poly == LaurentPoly::constant(Rational(2)));
    CHECK(parse_symbol("z").poly == LaurentPoly::monomial(1));
    CHECK(parse_symbol("-z^-3").poly == LaurentPoly::monomial(-3, Rational(-1)));
    CHECK(parse_symbol("3/4*z^2 + z + 1").poly ==
          LaurentPoly::monomial(2, Rational(3, 4)) + LaurentPoly::monomial(1) +
              LaurentPoly::constant(Rational(1)));
    CHECK(parse_symbol("z - z").poly.is_zero());
    CHECK(parse_symbol("  z ^ 2  ").poly == LaurentPoly::monomial(2));

    try {
        parse_symbol("z^");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_symbol(""), ParseError);
    CHECK_THROWS_AS(parse_symbol("   "), ParseError);
    CHECK_THROWS_AS(parse_symbol("1/0"), ParseError);
    CHECK_THROWS_AS(parse_symbol("z z"), ParseError);
    CHECK_THROWS_AS(parse_symbol("2*"), ParseError);
    CHECK_THROWS_AS(parse_symbol("q"), ParseError);
}

TEST_CASE("print/parse round trip") {
    std::mt19937 rng(31415);
    std::uniform_int_distribution<int> exp_dist(-9, 9);
    std::uniform_int_distribution<int> num_dist(-12, 12);
    std::uniform_int_distribution<int> den_dist(1, 9);
    std::uniform_int_distribution<int> count_dist(0, 6);
    for (int round = 0; round < 200; ++round) {
        LaurentPoly p;
        const int n = count_dist(rng);
        for (int t = 0; t < n; ++t)
            p.add_term(exp_dist(rng), Rational(num_dist(rng), den_dist(rng)));
        CHECK(parse_symbol(print_poly(p)).poly == p);
    }
    CHECK(print_poly(LaurentPoly()) == "0");
}

TEST_CASE("matrix command emits the displayed window in CSV") {
    const CliRun r = run_cli({"matrix", "--s", "1", "--symbol", "z^3+z^4+z^5+z^6",
                              "--rows", "6", "--cols", "5", "--format", "csv",
                              "--paper-orientation"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "0,0,0,0,0\n"
          "4,0,0,0,0\n"
          "3,2,0,0,0\n"
          "2,1,0,0,0\n"
          "1,0,-1,-2,0\n"
          "0,-1,-2,-3,-4\n");

    // byte-identical on a second run
    const CliRun again = run_cli({"matrix", "--s", "1", "--symbol", "z^3+z^4+z^5+z^6",
                                  "--rows", "6", "--cols", "5", "--format", "csv",
                                  "--paper-orientation"});
    CHECK(again.out == r.out);
}

TEST_CASE("CSV round trip against the in-memory window") {
    const LaurentPoly x = parse_symbol("z^3 + 1/3 z^5").poly;
    const OperatorWindow w = matrix_window(1, x, 5, 4);
    const std::string csv = window_to_csv(w, false);
    const OperatorWindow back = window_from_csv(1, csv);
    CHECK(back.entries == w.entries);
    CHECK(back.rows == w.rows);
    CHECK(back.cols == w.cols);
}

TEST_CASE("section command prints the v vector") {
    const CliRun r = run_cli({"section", "--s", "2"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("s") == 2);
    CHECK(j.at("vector") == "v5");
    REQUIRE(j.at("entries").size() == 3);
    // keys descend lexicographically: (3,2), (4,1), (5,0)
    CHECK(j.at("entries")[0].at("key") == Json::array({3, 2}));
    CHECK(rational_from_json(j.at("entries")[0].at("value")) == Rational(-8));
    CHECK(rational_from_json(j.at("entries")[1].at("value")) == Rational(4));
    CHECK(rational_from_json(j.at("entries")[2].at("value")) == Rational(-4, 5));
}

TEST_CASE("solve-a and lowest commands") {
    const CliRun r = run_cli({"solve-a", "--s", "2"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    REQUIRE(j.at("entries").size() == 3);
    CHECK(rational_from_json(j.at("entries")[0]) == Rational(1, 2));
    CHECK(rational_from_json(j.at("entries")[1]) == Rational(3));
    CHECK(rational_from_json(j.at("entries")[2]) == Rational(3));

    const CliRun low = run_cli({"lowest", "--s", "2"});
    CHECK(low.code == 0);
    const Json lj = Json::parse(low.out);
    CHECK(lj.at("entries").size() == 3);
}

TEST_CASE("apply command routes agree") {
    const CliRun diff = run_cli({"apply", "--s", "1", "--symbol", "z^3+z^4",
                                 "--input", "z^-1 + 2z^-2"});
    const CliRun tens = run_cli({"apply", "--s", "1", "--symbol", "z^3+z^4",
                                 "--input", "z^-1 + 2z^-2", "--via", "tensor"});
    CHECK(diff.code == 0);
    CHECK(tens.code == 0);
    CHECK(Json::parse(diff.out).at("entries") == Json::parse(tens.out).at("entries"));
}

TEST_CASE("adjoint command reports a consistent constant") {
    const CliRun r = run_cli({"adjoint", "--s", "1", "--k-max", "7"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(rational_from_json(j.at("lambda")) == Rational(1));
    CHECK(j.at("samples").size() > 0);
}

TEST_CASE("identity command streams results") {
    const CliRun r = run_cli({"identity", "--family", "A", "--max-s", "2",
                              "--k-margin", "3"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const Json j = Json::parse(line);
        CHECK(j.at("equal") == true);
        CHECK(j.at("family") == "A");
        ++count;
    }
    CHECK(count > 0);
}

TEST_CASE("verify command aggregates the suites") {
    const CliRun r = run_cli({"verify", "--suite", "all", "--max-s", "3"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("passed") == true);
    CHECK(j.at("suites").size() == 7);
    // the measured bracket constants land in the sections suite details
    for (const auto& suite : j.at("suites"))
        if (suite.at("name") == "sections")
            CHECK(suite.at("details").at("bracket_constants").at("[E,A+]") == "2");
}

TEST_CASE("usage and parse failures exit with 2") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"matrix", "--s", "1"}).code == 2);                      // missing --symbol
    CHECK(run_cli({"matrix", "--s", "1", "--symbol", "z^"}).code == 2);    // parse error
    CHECK(run_cli({"matrix", "--s", "1", "--symbol", "z^-1"}).code == 2);  // bad domain
    CHECK(run_cli({"solve-a"}).code == 2);
    CHECK(run_cli({}).code == 2);

    const CliRun bad = run_cli({"matrix", "--s", "1", "--symbol", "z^"});
    CHECK(bad.err.find("position 2") != std::string::npos);
}
