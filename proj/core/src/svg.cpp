#include "ramtower/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ramtower {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 48.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (const char ch : s) {
        switch (ch) {
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '&':
            out += "&amp;";
            break;
        default:
            out += ch;
        }
    }
    return out;
}

} // namespace

std::string render_svg(const NewtonPolygon& np) {
    const auto& vs = np.vertices();
    double x0 = 0;
    double x1 = 1;
    double y0 = 0;
    double y1 = 1;
    if (!vs.empty()) {
        x0 = static_cast<double>(vs.front().x);
        x1 = static_cast<double>(vs.back().x);
        y0 = vs.front().y.get_d();
        y1 = y0;
        for (const Vertex& v : vs) {
            y0 = std::min(y0, v.y.get_d());
            y1 = std::max(y1, v.y.get_d());
        }
    }
    if (x1 <= x0) {
        x1 = x0 + 1;
    }
    if (y1 <= y0) {
        y1 = y0 + 1;
    }
    const auto sx = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
    const auto sy = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(kWidth) << ' ' << fmt(kHeight)
        << "\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(kHeight) << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(kHeight)
        << "\" fill=\"white\"/>\n";
    for (std::size_t k = 0; k < np.sides().size(); ++k) {
        const Vertex& a = vs[k];
        const Vertex& b = vs[k + 1];
        const double ax = sx(static_cast<double>(a.x));
        const double ay = sy(a.y.get_d());
        const double bx = sx(static_cast<double>(b.x));
        const double by = sy(b.y.get_d());
        out << "  <line class=\"side\" x1=\"" << fmt(ax) << "\" y1=\"" << fmt(ay) << "\" x2=\"" << fmt(bx)
            << "\" y2=\"" << fmt(by) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        out << "  <text class=\"slope\" x=\"" << fmt((ax + bx) / 2) << "\" y=\"" << fmt((ay + by) / 2 - 8)
            << "\" font-size=\"14\" fill=\"blue\">" << escape(to_string(np.sides()[k].slope)) << "</text>\n";
    }
    for (const Vertex& v : vs) {
        const double cx = sx(static_cast<double>(v.x));
        const double cy = sy(v.y.get_d());
        out << "  <circle class=\"vertex\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
            << "\" r=\"4\" fill=\"black\"/>\n";
        out << "  <text class=\"vertex-label\" x=\"" << fmt(cx + 6) << "\" y=\"" << fmt(cy + 16)
            << "\" font-size=\"12\">(" << v.x << ", " << escape(to_string(v.y)) << ")</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace ramtower
