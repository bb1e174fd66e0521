#include "svg.hpp"

#include <cstdio>

namespace hdran::cli {

namespace {

constexpr double kMargin = 40.0;
constexpr double kSide = 420.0;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string points_attr(const std::vector<std::pair<double, double>>& points) {
    std::string out;
    char buf[64];
    for (const auto& [x, y] : points) {
        std::snprintf(buf, sizeof buf, "%s%.4f,%.4f", out.empty() ? "" : " ", kMargin + kSide * x,
                      kMargin + kSide * (1.0 - y));
        out += buf;
    }
    return out;
}

}  // namespace

std::vector<std::pair<double, double>> thin(const std::vector<std::pair<double, double>>& points,
                                            std::size_t max_points) {
    if (points.size() <= max_points || max_points < 2) return points;
    std::vector<std::pair<double, double>> out;
    out.reserve(max_points);
    const std::size_t last = points.size() - 1;
    for (std::size_t i = 0; i < max_points; ++i) out.push_back(points[i * last / (max_points - 1)]);
    return out;
}

std::string lorenz_svg(const std::vector<Polyline>& curves) {
    const double size = 2 * kMargin + kSide;
    char buf[256];
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  size, size, size, size);
    out += buf;
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.0f\" y=\"%.0f\" width=\"%.0f\" height=\"%.0f\" fill=\"none\" stroke=\"#999\"/>\n",
                  kMargin, kMargin, kSide, kSide);
    out += buf;
    out += "<polyline class=\"equality\" fill=\"none\" stroke=\"#555\" stroke-dasharray=\"4 3\" points=\"" +
           points_attr({{0.0, 0.0}, {1.0, 1.0}}) + "\"/>\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const char* color = kColors[i % (sizeof kColors / sizeof kColors[0])];
        out += "<polyline class=\"lorenz\" data-label=\"" + curves[i].label + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"1.5\" points=\"" + points_attr(curves[i].points) + "\"/>\n";
        std::snprintf(buf, sizeof buf, "<text x=\"%.0f\" y=\"%.0f\" font-size=\"12\" fill=\"%s\">%s</text>\n",
                      kMargin + 10, kMargin + 16 + 16.0 * static_cast<double>(i), color, curves[i].label.c_str());
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace hdran::cli
