#include "assoc/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

namespace assoc {

namespace {

struct Point {
    double x;
    double y;
};

std::string fmt(const char* pattern, double a, double b) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

}  // namespace

std::string render_svg(const Triangulation& t, const SvgStyle& style) {
    const int n = t.size();
    const double c = style.size / 2.0;
    const double r = c - style.margin;
    std::vector<Point> at(n);
    for (int v = 0; v < n; ++v) {
        // Screen y grows downward, so increasing angle from the top is clockwise.
        const double phi = 2.0 * std::numbers::pi * v / n;
        at[v] = {c + r * std::sin(phi), c - r * std::cos(phi)};
    }

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";
    out += fmt(" width=\"%.0f\" height=\"%.0f\"", style.size, style.size);
    out += fmt(" viewBox=\"0 0 %.0f %.0f\">\n", style.size, style.size);
    out += "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (int v = 0; v < n; ++v) out += fmt(v ? " %.2f,%.2f" : "%.2f,%.2f", at[v].x, at[v].y);
    out += "\"/>\n";
    for (const Edge& e : t.interior()) {
        out += "<line stroke=\"black\" stroke-width=\"1.5\"";
        out += fmt(" x1=\"%.2f\" y1=\"%.2f\"", at[e.a].x, at[e.a].y);
        out += fmt(" x2=\"%.2f\" y2=\"%.2f\"/>\n", at[e.b].x, at[e.b].y);
    }
    for (int v = 0; v < n; ++v) {
        out += fmt("<circle r=\"3\" cx=\"%.2f\" cy=\"%.2f\"/>\n", at[v].x, at[v].y);
    }
    if (style.labels) {
        const double lr = r + style.margin / 2.0;
        for (int v = 0; v < n; ++v) {
            const double phi = 2.0 * std::numbers::pi * v / n;
            out += fmt("<text font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\""
                       " dominant-baseline=\"central\" x=\"%.2f\" y=\"%.2f\">",
                       c + lr * std::sin(phi), c - lr * std::cos(phi));
            out += std::to_string(v) + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace assoc
