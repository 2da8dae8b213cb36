#ifndef CDP_SVG_HPP
#define CDP_SVG_HPP

#include <string>

#include "cdp/datasets.hpp"

namespace cdp {

// Minimal scatter writer: axes, one circle per point, color ramp over the
// cloud's color field (flat fill when absent). Uses the first two
// coordinates (y = 0 for 1-D clouds). Output is well-formed XML.
void save_scatter_svg(const PointCloud& cloud, const std::string& path,
                      int width = 640, int height = 480);

} // namespace cdp

#endif
