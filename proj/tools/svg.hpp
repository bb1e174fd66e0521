#ifndef HDRAN_TOOLS_SVG_HPP
#define HDRAN_TOOLS_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace hdran::cli {

struct Polyline {
    std::string label;
    std::vector<std::pair<double, double>> points;  // unit square coordinates
};

/// Minimal SVG of Lorenz curves on the unit square: one polyline per curve
/// plus the line of equality.
std::string lorenz_svg(const std::vector<Polyline>& curves);

/// At most max_points points, evenly spaced by index, endpoints kept.
std::vector<std::pair<double, double>> thin(const std::vector<std::pair<double, double>>& points,
                                            std::size_t max_points);

}  // namespace hdran::cli

#endif  // HDRAN_TOOLS_SVG_HPP
