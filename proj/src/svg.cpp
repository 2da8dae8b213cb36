#include "cdp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cdp {

namespace {

// Compact viridis approximation; positions are equally spaced on [0, 1].
constexpr int kRampSize = 8;
constexpr unsigned char kViridis[kRampSize][3] = {
    {68, 1, 84},   {70, 50, 127},  {54, 92, 141},  {39, 127, 142},
    {31, 161, 135}, {74, 194, 109}, {159, 218, 58}, {253, 231, 37},
};

std::string ramp_color(double t) {
    t = std::clamp(t, 0.0, 1.0);
    const double pos = t * (kRampSize - 1);
    const int lo = std::min(kRampSize - 2, static_cast<int>(pos));
    const double f = pos - lo;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                  static_cast<int>(std::lround(kViridis[lo][0] + f * (kViridis[lo + 1][0] - kViridis[lo][0]))),
                  static_cast<int>(std::lround(kViridis[lo][1] + f * (kViridis[lo + 1][1] - kViridis[lo][1]))),
                  static_cast<int>(std::lround(kViridis[lo][2] + f * (kViridis[lo + 1][2] - kViridis[lo][2]))));
    return buf;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

} // namespace

void save_scatter_svg(const PointCloud& cloud, const std::string& path, int width, int height) {
    const Eigen::Index n = cloud.size();
    if (n < 1) throw std::invalid_argument("empty cloud");
    const bool has_y = cloud.dim() >= 2;

    double xmin = cloud.points.col(0).minCoeff();
    double xmax = cloud.points.col(0).maxCoeff();
    double ymin = has_y ? cloud.points.col(1).minCoeff() : 0.0;
    double ymax = has_y ? cloud.points.col(1).maxCoeff() : 0.0;
    if (xmax - xmin <= 0.0) { xmin -= 1.0; xmax += 1.0; }
    if (ymax - ymin <= 0.0) { ymin -= 1.0; ymax += 1.0; }
    const double xpad = 0.05 * (xmax - xmin);
    const double ypad = 0.05 * (ymax - ymin);
    xmin -= xpad; xmax += xpad; ymin -= ypad; ymax += ypad;

    const double margin = 42.0;
    const double plot_w = width - 2 * margin;
    const double plot_h = height - 2 * margin;
    auto px = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * plot_h; };

    double cmin = 0.0, cmax = 1.0;
    if (!cloud.color.empty()) {
        cmin = *std::min_element(cloud.color.begin(), cloud.color.end());
        cmax = *std::max_element(cloud.color.begin(), cloud.color.end());
        if (cmax - cmin <= 0.0) cmax = cmin + 1.0;
    }

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" fill=\"white\"/>\n";
    // axes
    svg += "<line x1=\"" + num(margin) + "\" y1=\"" + num(height - margin) + "\" x2=\"" +
           num(width - margin) + "\" y2=\"" + num(height - margin) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + num(margin) + "\" y1=\"" + num(margin) + "\" x2=\"" + num(margin) +
           "\" y2=\"" + num(height - margin) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(margin) + "\" y=\"" + num(height - margin + 14.0) +
           "\" font-size=\"10\">" + num(xmin) + "</text>\n";
    svg += "<text x=\"" + num(width - margin - 30.0) + "\" y=\"" + num(height - margin + 14.0) +
           "\" font-size=\"10\">" + num(xmax) + "</text>\n";
    svg += "<text x=\"2\" y=\"" + num(height - margin) + "\" font-size=\"10\">" + num(ymin) +
           "</text>\n";
    svg += "<text x=\"2\" y=\"" + num(margin + 10.0) + "\" font-size=\"10\">" + num(ymax) +
           "</text>\n";

    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = cloud.points(i, 0);
        const double y = has_y ? cloud.points(i, 1) : 0.0;
        const std::string fill =
            cloud.color.empty()
                ? std::string("#1f77b4")
                : ramp_color((cloud.color[static_cast<std::size_t>(i)] - cmin) / (cmax - cmin));
        svg += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) +
               "\" r=\"3\" fill=\"" + fill + "\" fill-opacity=\"0.8\"/>\n";
    }
    svg += "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << svg;
    if (!out) throw std::runtime_error("write failed for " + path);
}

} // namespace cdp
