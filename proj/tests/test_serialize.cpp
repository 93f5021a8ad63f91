#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chaingeo/errors.hpp"
#include "chaingeo/serialize.hpp"

using namespace chaingeo;
using nlohmann::json;

TEST_CASE("QNum serializes as an exact triple with a decimal hint")
{
    const QNum x(Rational(3), Rational(-2), 2);
    const json j = x;
    CHECK(j.at("p") == "3/1");
    CHECK(j.at("q") == "-2/1");
    CHECK(j.at("radicand") == 2);
    CHECK(j.at("decimal").get<double>() == 0.171572875253810);
    CHECK(j.get<QNum>() == x);

    const json half = QNum::rational(Rational(1, 2), 7);
    CHECK(half.dump() == R"({"decimal":0.5,"p":"1/2","q":"0/1","radicand":7})");
}

TEST_CASE("readers canonicalize and validate")
{
    const json folded = {{"p", "0/1"}, {"q", "3/1"}, {"radicand", 4}};
    CHECK(folded.get<QNum>() == QNum::rational(Rational(6), 4));
    const json bad_point = {{"x", {{"p", "0/1"}, {"q", "0/1"}, {"radicand", 2}}},
                            {"y", {{"p", "0/1"}, {"q", "0/1"}, {"radicand", 3}}}};
    CHECK_THROWS_AS(bad_point.get<Point>(), RadicandMismatch);
    const json bad_circle = {{"cx", {{"p", "0/1"}, {"q", "0/1"}, {"radicand", 2}}},
                             {"cy", {{"p", "0/1"}, {"q", "0/1"}, {"radicand", 2}}},
                             {"r", {{"p", "-1/1"}, {"q", "0/1"}, {"radicand", 2}}}};
    CHECK_THROWS_AS(bad_circle.get<Circle>(), ParameterError);
    CHECK_THROWS_AS((json{{"p", "x"}, {"q", "0/1"}, {"radicand", 2}}).get<QNum>(), std::invalid_argument);
}

TEST_CASE("property: configurations round-trip through JSON text")
{
    for (unsigned n = 1; n <= 25; ++n) {
        for (const auto& a : {Rational(1), Rational(2, 3), Rational(7, 5)}) {
            const auto cb = build_cb(n, QNum::rational(a, n));
            CHECK(json::parse(json(cb).dump()).get<ChainConfig>() == cb);
            if (n >= 2) {
                const auto ca = build_ca(n, QNum::rational(a, n));
                CHECK(json::parse(json(ca).dump()).get<ChainConfig>() == ca);
            }
        }
    }
}

TEST_CASE("config document layout")
{
    const json j = build_cb(2, QNum::rational(Rational(1), 2));
    CHECK(j.at("kind") == "CB");
    CHECK(j.at("n") == 2);
    CHECK(j.at("outer").size() == 2);
    CHECK(j.at("chain").size() == 2);
    CHECK(j.at("chain")[0].contains("cx"));
    CHECK(j.at("points").contains("A"));
    CHECK(j.at("b").at("p") == "3/1");
    CHECK(j.at("b").at("q") == "-2/1");

    VerificationReport report;
    report.add("x", true);
    report.add("y", false);
    const json r = report;
    CHECK(r.at("overall") == false);
    CHECK(r.at("entries")[1].at("name") == "y");
}
