#include "chaingeo/render.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "chaingeo/errors.hpp"

namespace chaingeo {

namespace {

struct Frame {
    double xmin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;
    double margin = 0.0;
    double scale = 1.0;
    double width = 0.0;
    double height = 0.0;

    double px(double x) const { return (x - xmin + margin) * scale; }
    double py(double y) const { return (ymax + margin - y) * scale; }
};

Frame make_frame(const ChainConfig& cfg, const RenderOptions& opts)
{
    Frame f;
    bool first = true;
    const auto extend = [&](const Circle& c) {
        const double cx = c.center.x.to_double();
        const double cy = c.center.y.to_double();
        const double r = c.r.to_double();
        if (first) {
            f.xmin = cx - r;
            f.xmax = cx + r;
            f.ymax = cy + r;
            first = false;
            return;
        }
        f.xmin = std::min(f.xmin, cx - r);
        f.xmax = std::max(f.xmax, cx + r);
        f.ymax = std::max(f.ymax, cy + r);
    };
    for (const auto& c : cfg.outer)
        extend(c);
    for (const auto& c : cfg.chain)
        extend(c);
    const double span = f.xmax - f.xmin;
    f.margin = opts.margin_fraction.to_double() * span;
    f.scale = opts.width_px / (span + 2.0 * f.margin);
    f.width = opts.width_px;
    f.height = (f.ymax + 2.0 * f.margin) * f.scale;
    return f;
}

void validate(const ChainConfig& cfg, const RenderOptions& opts)
{
    if (opts.width_px < 100)
        throw ParameterError("width_px must be at least 100");
    if (opts.decimals < 2 || opts.decimals > 12)
        throw ParameterError("decimals must be in 2..12");
    if (opts.margin_fraction.sign() <= 0 || opts.margin_fraction >= Rational(1, 2))
        throw ParameterError("margin_fraction must be in (0, 1/2)");
    if (opts.show_square && !(cfg.kind == ChainKind::CB && cfg.n == 1))
        throw ParameterError("square overlay is only defined for CB(1)");
    if (cfg.outer.empty() || cfg.chain.empty())
        throw ParameterError("nothing to render");
}

class Writer {
public:
    explicit Writer(int decimals) : decimals_(decimals) {}

    std::string num(double v) const { return format_fixed(v, decimals_); }
    std::string num(const QNum& v) const { return num(v.to_double()); }
    /// Transform entries and stroke sizes, which must not round to zero
    /// whatever the coordinate precision.
    std::string fine(double v) const { return format_fixed(v, 12); }

    std::ostringstream out;

private:
    int decimals_;
};

} // namespace

std::string format_fixed(double value, int decimals)
{
    std::array<char, 512> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::fixed, decimals);
    if (ec != std::errc())
        throw ParameterError("value out of printable range");
    std::string text(buf.data(), end);
    // "-0.000" prints as "0.000"
    if (text.front() == '-' && text.find_first_not_of("-0.") == std::string::npos)
        text.erase(0, 1);
    return text;
}

std::string render_svg(const ChainConfig& cfg, const RenderOptions& opts)
{
    validate(cfg, opts);
    const Frame f = make_frame(cfg, opts);
    Writer w(opts.decimals);
    auto& os = w.out;
    const bool cb = cfg.kind == ChainKind::CB;

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w.num(f.width)
       << "\" height=\"" << w.num(f.height) << "\" viewBox=\"0 0 " << w.num(f.width) << ' '
       << w.num(f.height) << "\">\n";
    os << "  <title>" << to_string(cfg.kind) << '(' << cfg.n << "), a = " << cfg.a.to_string()
       << "</title>\n";

    // Model space: x right, y up, baseline at y = 0.
    os << "  <g transform=\"matrix(" << w.fine(f.scale) << " 0 0 " << w.fine(-f.scale) << ' '
       << w.fine(f.px(0.0)) << ' ' << w.fine(f.py(0.0)) << ")\" fill=\"none\" stroke=\"black\""
       << " stroke-width=\"" << w.fine(1.5 / f.scale) << "\">\n";
    os << "    <line class=\"baseline\" x1=\"" << w.num(f.xmin - f.margin / 2.0) << "\" y1=\""
       << w.num(0.0) << "\" x2=\"" << w.num(f.xmax + f.margin / 2.0) << "\" y2=\"" << w.num(0.0)
       << "\"/>\n";
    const auto circle = [&](const Circle& c, const char* cls) {
        os << "    <circle class=\"" << cls << "\" cx=\"" << w.num(c.center.x) << "\" cy=\""
           << w.num(c.center.y) << "\" r=\"" << w.num(c.r) << "\"/>\n";
    };
    for (const auto& c : cfg.outer)
        circle(c, "outer");
    for (const auto& c : cfg.chain)
        circle(c, "chain");

    if (opts.show_square) {
        const SquareResult sq = square_in_delta(cfg.a);
        os << "    <path class=\"square\" stroke=\"#b03030\" d=\"M " << w.num(sq.D.x) << ' '
           << w.num(sq.D.y) << " L " << w.num(sq.A.x) << ' ' << w.num(sq.A.y) << " L "
           << w.num(sq.B.x) << ' ' << w.num(sq.B.y) << " L " << w.num(sq.C.x) << ' '
           << w.num(sq.C.y) << " Z\"/>\n";
    }

    const double dot = 3.0 / f.scale;
    const std::array<std::pair<const char*, const Point*>, 3> points{
        {{"A", &cfg.A}, {"B", &cfg.B}, {"C", &cfg.C}}};
    for (const auto& [name, p] : points) {
        os << "    <ellipse class=\"point\" id=\"point-" << name << "\" cx=\"" << w.num(p->x)
           << "\" cy=\"" << w.num(p->y) << "\" rx=\"" << w.fine(dot) << "\" ry=\"" << w.fine(dot)
           << "\" fill=\"black\" stroke=\"none\"/>\n";
    }
    os << "  </g>\n";

    if (opts.show_labels) {
        // Text lives in pixel space so it is not mirrored by the flip.
        os << "  <g font-family=\"serif\" font-size=\"14\" text-anchor=\"middle\">\n";
        const auto label = [&](double x, double y, const std::string& text) {
            os << "    <text x=\"" << w.num(f.px(x)) << "\" y=\"" << w.num(f.py(y)) << "\">"
               << text << "</text>\n";
        };
        if (cb) {
            label(cfg.outer[0].center.x.to_double(), cfg.outer[0].center.y.to_double(),
                  "α1");
            label(cfg.outer[1].center.x.to_double(), cfg.outer[1].center.y.to_double(),
                  "α2");
        } else {
            label(cfg.outer[0].center.x.to_double(), cfg.outer[0].center.y.to_double(), "α");
        }
        for (std::size_t i = 0; i < cfg.chain.size(); ++i) {
            const auto& c = cfg.chain[i];
            label(c.center.x.to_double(), c.center.y.to_double(),
                  "β" + std::to_string(i + 1));
        }
        const double lift = 16.0 / f.scale;
        for (const auto& [name, p] : points) {
            const double below = std::string(name) == "A" ? -lift : lift * 0.6;
            label(p->x.to_double(), p->y.to_double() + below, name);
        }
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_report(const VerificationReport& report)
{
    std::size_t width = 0;
    for (const auto& e : report.entries)
        width = std::max(width, e.name.size());
    std::ostringstream os;
    for (const auto& e : report.entries) {
        os << e.name << std::string(width - e.name.size() + 2, ' ') << (e.holds ? "PASS" : "FAIL")
           << '\n';
    }
    os << "OVERALL " << (report.overall() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

} // namespace chaingeo
