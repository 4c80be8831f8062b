#include "wallcross/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace wallcross
{

namespace
{

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string &s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::string leading_term(const LieElement &x)
{
    const auto lo = x.min_order();
    return lo ? x.homogeneous_part(*lo).str() : "0";
}

} // namespace

std::string render_svg(const Diagram &d, const SvgStyle &style)
{
    const double c = style.size / 2.0;
    const double radius = c - style.margin;
    const auto px = [&](double x) { return num(c + x); };
    const auto py = [&](double y) { return num(c - y); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.size << "\" height=\"" << style.size
        << "\" viewBox=\"0 0 " << style.size << ' ' << style.size << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "  <g id=\"axes\" stroke=\"#cccccc\" stroke-width=\"1\" stroke-dasharray=\"4 4\">\n"
        << "    <line x1=\"" << px(-radius) << "\" y1=\"" << py(0) << "\" x2=\"" << px(radius) << "\" y2=\""
        << py(0) << "\"/>\n"
        << "    <line x1=\"" << px(0) << "\" y1=\"" << py(-radius) << "\" x2=\"" << px(0) << "\" y2=\""
        << py(radius) << "\"/>\n"
        << "  </g>\n"
        << "  <g id=\"walls\" font-family=\"monospace\" font-size=\"10\">\n";

    for (std::size_t i = 0; i < d.walls.size(); ++i) {
        const auto &w = d.walls[i];
        const double dx = static_cast<double>(w.support.direction[0]);
        const double dy = static_cast<double>(w.support.direction[1]);
        const double len = std::hypot(dx, dy);
        const double ex = dx / len * radius;
        const double ey = dy / len * radius;
        const bool line = w.support.kind == SupportKind::line;
        const char *colour = line ? "#000000" : "#1f4e9c";
        // Lines are drawn as their two half-rays, matching how the loop crosses them.
        for (const double side : line ? std::vector<double>{1.0, -1.0} : std::vector<double>{1.0}) {
            out << "    <line class=\"" << (line ? "line-wall" : "ray-wall") << "\" data-wall=\"" << i
                << "\" x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(side * ex) << "\" y2=\""
                << py(side * ey) << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        }
        const std::string label = "m=" + w.mode.str() + "  " + leading_term(w.log_factor);
        // Labels sit just beyond the end of the ray, anchored away from the centre.
        const double lx = ex * 1.04;
        const double ly = ey * 1.04;
        const char *anchor = lx > 1e-9 ? "start" : (lx < -1e-9 ? "end" : "middle");
        out << "    <text x=\"" << px(lx) << "\" y=\"" << py(ly) << "\" text-anchor=\"" << anchor
            << "\" fill=\"" << colour << "\">" << escape(label) << "</text>\n";
    }
    out << "  </g>\n"
        << "  <circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"3\" fill=\"#b22222\"/>\n"
        << "</svg>\n";
    return out.str();
}

} // namespace wallcross
