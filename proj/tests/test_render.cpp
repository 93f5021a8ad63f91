#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "chaingeo/errors.hpp"
#include "chaingeo/render.hpp"
#include "support/svg_inspect.hpp"

using namespace chaingeo;
using chaingeo::testing::count_elements;

namespace {

QNum rat(long num, long den, Radicand n)
{
    return QNum::rational(Rational(num, den), n);
}

bool well_formed(const std::string& svg)
{
    std::istringstream in(svg);
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_xml(in, tree);
    } catch (const boost::property_tree::xml_parser_error&) {
        return false;
    }
    return tree.count("svg") == 1;
}

std::string attribute(const std::string& element, const std::string& name)
{
    const std::regex re(" " + name + "=\"([^\"]*)\"");
    std::smatch m;
    if (!std::regex_search(element, m, re))
        return {};
    return m[1];
}

std::vector<std::string> elements(const std::string& svg, const std::string& tag)
{
    std::vector<std::string> out;
    const std::regex re("<" + tag + "[^>]*>");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
        out.push_back(it->str());
    return out;
}

} // namespace

TEST_CASE("CB(5) has the expected elements")
{
    const auto svg = render_svg(build_cb(5, rat(1, 1, 5)));
    CHECK(count_elements(svg, "circle") == 7);
    CHECK(count_elements(svg, "line") == 1);
    CHECK(count_elements(svg, "ellipse") == 3);
    CHECK(count_elements(svg, "path") == 0);
    CHECK(well_formed(svg));
}

TEST_CASE("rendering is deterministic")
{
    const auto cfg = build_ca(4, rat(1, 1, 4));
    CHECK(render_svg(cfg) == render_svg(cfg));
    const auto again = build_ca(4, rat(1, 1, 4));
    CHECK(render_svg(cfg) == render_svg(again));
}

TEST_CASE("square overlay on CB(1)")
{
    RenderOptions opts;
    opts.show_square = true;
    const auto cfg = build_cb(1, rat(1, 1, 1));
    const auto svg = render_svg(cfg, opts);
    CHECK(well_formed(svg));
    REQUIRE(count_elements(svg, "path") == 1);

    const auto path = elements(svg, "path").front();
    std::istringstream d(attribute(path, "d"));
    std::string tok;
    std::vector<std::string> coords;
    while (d >> tok)
        if (tok != "M" && tok != "L" && tok != "Z")
            coords.push_back(tok);
    REQUIRE(coords.size() == 8);
    // corners D, A, B, C; B and C are the upper ones
    const auto dots = elements(svg, "ellipse");
    REQUIRE(dots.size() == 3);
    CHECK(attribute(dots[1], "cx") == coords[4]);
    CHECK(attribute(dots[1], "cy") == coords[5]);
    CHECK(attribute(dots[2], "cx") == coords[6]);
    CHECK(attribute(dots[2], "cy") == coords[7]);
    CHECK(coords[4] == format_fixed(0.2, opts.decimals));
    CHECK(coords[5] == format_fixed(0.4, opts.decimals));

    CHECK_THROWS_AS(render_svg(build_cb(2, rat(1, 1, 2)), opts), ParameterError);
    CHECK_THROWS_AS(render_svg(build_ca(2, rat(1, 1, 2)), opts), ParameterError);
}

TEST_CASE("drawn circles match the exact values at printed precision")
{
    for (int decimals : {2, 6, 12}) {
        RenderOptions opts;
        opts.decimals = decimals;
        for (const auto& cfg : {build_cb(7, rat(3, 2, 7)), build_ca(6, rat(2, 3, 6))}) {
            const auto svg = render_svg(cfg, opts);
            CHECK(well_formed(svg));
            const auto circles = elements(svg, "circle");
            REQUIRE(circles.size() == cfg.outer.size() + cfg.chain.size());
            std::vector<Circle> all = cfg.outer;
            all.insert(all.end(), cfg.chain.begin(), cfg.chain.end());
            for (std::size_t i = 0; i < all.size(); ++i) {
                CHECK(attribute(circles[i], "cx") == format_fixed(all[i].center.x.to_double(), decimals));
                CHECK(attribute(circles[i], "cy") == format_fixed(all[i].center.y.to_double(), decimals));
                CHECK(attribute(circles[i], "r") == format_fixed(all[i].r.to_double(), decimals));
            }
        }
    }
}

TEST_CASE("labels are optional and name the chain left to right")
{
    RenderOptions opts;
    const auto cfg = build_cb(3, rat(1, 1, 3));
    const auto with = render_svg(cfg, opts);
    CHECK(with.find(">β1<") != std::string::npos);
    CHECK(with.find(">β3<") != std::string::npos);
    CHECK(with.find(">α2<") != std::string::npos);
    opts.show_labels = false;
    const auto without = render_svg(cfg, opts);
    CHECK(count_elements(without, "text") == 0);
    CHECK(count_elements(without, "circle") == 5);
}

TEST_CASE("render options are validated")
{
    const auto cfg = build_cb(2, rat(1, 1, 2));
    RenderOptions opts;
    opts.width_px = 99;
    CHECK_THROWS_AS(render_svg(cfg, opts), ParameterError);
    opts = {};
    opts.decimals = 1;
    CHECK_THROWS_AS(render_svg(cfg, opts), ParameterError);
    opts.decimals = 13;
    CHECK_THROWS_AS(render_svg(cfg, opts), ParameterError);
    opts = {};
    opts.margin_fraction = Rational(1, 2);
    CHECK_THROWS_AS(render_svg(cfg, opts), ParameterError);
    opts.margin_fraction = Rational(0);
    CHECK_THROWS_AS(render_svg(cfg, opts), ParameterError);
}

TEST_CASE("fixed formatting")
{
    CHECK(format_fixed(0.1, 3) == "0.100");
    CHECK(format_fixed(-0.0001, 3) == "0.000");
    CHECK(format_fixed(-1.5, 2) == "-1.50");
    CHECK(format_fixed(1e20, 2) == "100000000000000000000.00");
}

TEST_CASE("report table")
{
    VerificationReport report;
    for (int i = 0; i < 7; ++i)
        report.add("identity " + std::to_string(i), true);
    auto text = render_report(report);
    CHECK(std::count(text.begin(), text.end(), '\n') == 8);
    CHECK(text.ends_with("OVERALL PASS\n"));

    report.entries[3].holds = false;
    text = render_report(report);
    CHECK(text.find("identity 3  FAIL\n") != std::string::npos);
    CHECK(text.ends_with("OVERALL FAIL\n"));

    CHECK(render_report(VerificationReport{}) == "OVERALL PASS\n");
}
