#include "chaingeo/serialize.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace chaingeo {

using nlohmann::json;

double decimal_15(const QNum& x)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x.to_double(),
                                   std::chars_format::general, 15);
    *end = '\0';
    return std::strtod(buf, nullptr);
}

void to_json(json& j, const Rational& r)
{
    j = r.to_fraction_string();
}

void from_json(const json& j, Rational& r)
{
    r = Rational::parse(j.get<std::string>());
}

void to_json(json& j, const QNum& x)
{
    j = json{{"p", x.p()}, {"q", x.q()}, {"radicand", x.radicand()}, {"decimal", decimal_15(x)}};
}

void from_json(const json& j, QNum& x)
{
    x = QNum(j.at("p").get<Rational>(), j.at("q").get<Rational>(),
             j.at("radicand").get<Radicand>());
}

void to_json(json& j, const Point& p)
{
    j = json{{"x", p.x}, {"y", p.y}};
}

void from_json(const json& j, Point& p)
{
    p = Point(j.at("x").get<QNum>(), j.at("y").get<QNum>());
}

void to_json(json& j, const Circle& c)
{
    j = json{{"cx", c.center.x}, {"cy", c.center.y}, {"r", c.r}};
}

void from_json(const json& j, Circle& c)
{
    c = Circle(Point(j.at("cx").get<QNum>(), j.at("cy").get<QNum>()), j.at("r").get<QNum>());
}

void to_json(json& j, const ChainConfig& cfg)
{
    j = json{{"kind", to_string(cfg.kind)},
             {"n", cfg.n},
             {"a", cfg.a},
             {"b", cfg.b},
             {"outer", cfg.outer},
             {"chain", cfg.chain},
             {"points", json{{"A", cfg.A}, {"B", cfg.B}, {"C", cfg.C}}},
             {"d", cfg.d},
             {"bc", cfg.bc}};
}

void from_json(const json& j, ChainConfig& cfg)
{
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "CB")
        cfg.kind = ChainKind::CB;
    else if (kind == "CA")
        cfg.kind = ChainKind::CA;
    else
        throw std::invalid_argument("unknown configuration kind '" + kind + "'");
    cfg.n = j.at("n").get<unsigned>();
    cfg.a = j.at("a").get<QNum>();
    cfg.b = j.at("b").get<QNum>();
    cfg.outer = j.at("outer").get<std::vector<Circle>>();
    cfg.chain = j.at("chain").get<std::vector<Circle>>();
    const auto& points = j.at("points");
    cfg.A = points.at("A").get<Point>();
    cfg.B = points.at("B").get<Point>();
    cfg.C = points.at("C").get<Point>();
    cfg.d = j.at("d").get<QNum>();
    cfg.bc = j.at("bc").get<QNum>();
}

void to_json(json& j, const SquareResult& sq)
{
    j = json{{"side", sq.side},
             {"rejected_side", sq.rejected_side},
             {"points", json{{"A", sq.A}, {"B", sq.B}, {"C", sq.C}, {"D", sq.D}}}};
}

void to_json(json& j, const VerificationReport& report)
{
    json entries = json::array();
    for (const auto& e : report.entries)
        entries.push_back(json{{"name", e.name}, {"holds", e.holds}});
    j = json{{"entries", std::move(entries)}, {"overall", report.overall()}};
}

namespace oracle {

void to_json(json& j, const OracleResult& r)
{
    j = json{{"value", r.value}, {"iterations", r.iterations}, {"residual", r.residual}};
}

} // namespace oracle

} // namespace chaingeo
