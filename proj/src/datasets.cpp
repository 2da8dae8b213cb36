#include "cdp/datasets.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "cdp/common.hpp"

namespace cdp {
namespace {

// Portable uniform draws: mt19937_64 output mapped through the usual 53-bit
// construction, so clouds are bit-identical across standard libraries
// (std::uniform_real_distribution is implementation-defined).
class UniformSampler {
public:
    explicit UniformSampler(std::uint64_t seed) : rng_(seed) {}

    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::mt19937_64 rng_;
};

PointCloud make_toy5() {
    PointCloud cloud;
    cloud.points.resize(5, 3);
    cloud.points << 0.0, 0.0, 0.0,
                    1.0, 0.2, 0.0,
                    2.0, 0.0, 0.0,
                    2.0, 1.0, 0.0,
                    1.0, 0.5, 1.0;
    cloud.names = {"A", "B", "C", "D", "E"};
    cloud.color = {0.0, 1.0, 2.0, 3.0, 4.0};
    return cloud;
}

PointCloud generate_parametric(const DatasetSpec& spec) {
    const int n = spec.n_points;
    PointCloud cloud;
    cloud.points.resize(n, 3);
    cloud.color.resize(n);
    UniformSampler u(spec.seed);

    switch (spec.kind) {
    case DatasetKind::swiss_roll:
        for (int i = 0; i < n; ++i) {
            const double t = u.range(spec.swiss_t_min, spec.swiss_t_max);
            const double h = u.range(0.0, spec.swiss_height);
            cloud.points.row(i) << t * std::cos(t), h, t * std::sin(t);
            cloud.color[i] = t;
        }
        break;
    case DatasetKind::torus:
        for (int i = 0; i < n; ++i) {
            const double theta = u.range(0.0, 2.0 * kPi);
            const double phi = u.range(0.0, 2.0 * kPi);
            const double rad = spec.torus_major + spec.torus_minor * std::cos(phi);
            cloud.points.row(i) << rad * std::cos(theta), rad * std::sin(theta),
                spec.torus_minor * std::sin(phi);
            cloud.color[i] = theta;
        }
        break;
    case DatasetKind::s_curve:
        for (int i = 0; i < n; ++i) {
            const double t = u.range(-1.5 * kPi, 1.5 * kPi);
            const double h = u.range(0.0, spec.s_curve_height);
            const double sign = t < 0.0 ? -1.0 : 1.0;
            cloud.points.row(i) << std::sin(t), h, sign * (std::cos(t) - 1.0);
            cloud.color[i] = t;
        }
        break;
    case DatasetKind::helix:
        for (int i = 0; i < n; ++i) {
            const double t = u.range(0.0, 2.0 * kPi * spec.helix_turns);
            cloud.points.row(i) << spec.helix_radius * std::cos(t),
                spec.helix_radius * std::sin(t), spec.helix_pitch * t;
            cloud.color[i] = t;
        }
        break;
    case DatasetKind::mobius:
        for (int i = 0; i < n; ++i) {
            const double a = u.range(0.0, 2.0 * kPi);
            const double v = u.range(-spec.mobius_half_width, spec.mobius_half_width);
            const double rad = spec.mobius_radius + v * std::cos(a / 2.0);
            cloud.points.row(i) << rad * std::cos(a), rad * std::sin(a), v * std::sin(a / 2.0);
            cloud.color[i] = a;
        }
        break;
    case DatasetKind::klein:
        // Figure-8 immersion.
        for (int i = 0; i < n; ++i) {
            const double a = u.range(0.0, 2.0 * kPi);
            const double v = u.range(0.0, 2.0 * kPi);
            const double w = spec.klein_radius + std::cos(a / 2.0) * std::sin(v) -
                             std::sin(a / 2.0) * std::sin(2.0 * v);
            cloud.points.row(i) << w * std::cos(a), w * std::sin(a),
                std::sin(a / 2.0) * std::sin(v) + std::cos(a / 2.0) * std::sin(2.0 * v);
            cloud.color[i] = a;
        }
        break;
    case DatasetKind::annulus_obstacle:
        // Uniform planar annulus with a rejected circular obstacle; small
        // uniform thickness keeps all three coordinates non-degenerate.
        for (int i = 0; i < n; ++i) {
            double x = 0.0, y = 0.0;
            for (;;) {
                const double r2 =
                    u.range(spec.annulus_r_inner * spec.annulus_r_inner,
                            spec.annulus_r_outer * spec.annulus_r_outer);
                const double ang = u.range(0.0, 2.0 * kPi);
                x = std::sqrt(r2) * std::cos(ang);
                y = std::sqrt(r2) * std::sin(ang);
                const double dx = x - spec.annulus_obstacle_x;
                const double dy = y - spec.annulus_obstacle_y;
                if (dx * dx + dy * dy > spec.annulus_obstacle_radius * spec.annulus_obstacle_radius) {
                    break;
                }
            }
            const double z = u.range(-spec.annulus_thickness / 2.0, spec.annulus_thickness / 2.0);
            cloud.points.row(i) << x, y, z;
            cloud.color[i] = std::atan2(y, x);
        }
        break;
    case DatasetKind::toy5:
        break;   // handled by caller
    }
    return cloud;
}

bool parse_double(std::string_view token, double& out) {
    // from_chars wants no leading whitespace; trim both ends.
    std::size_t b = 0, e = token.size();
    while (b < e && std::isspace(static_cast<unsigned char>(token[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(token[e - 1]))) --e;
    if (b == e) return false;
    const char* first = token.data() + b;
    const char* last = token.data() + e;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return cells;
}

void format_double(std::string& out, double x) {
    std::array<char, 64> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    (void)ec;
    out.append(buf.data(), ptr);
}

} // namespace

DatasetKind parse_kind(std::string_view name) {
    if (name == "swiss_roll") return DatasetKind::swiss_roll;
    if (name == "torus") return DatasetKind::torus;
    if (name == "s_curve") return DatasetKind::s_curve;
    if (name == "helix") return DatasetKind::helix;
    if (name == "mobius") return DatasetKind::mobius;
    if (name == "klein") return DatasetKind::klein;
    if (name == "annulus_obstacle") return DatasetKind::annulus_obstacle;
    if (name == "toy5") return DatasetKind::toy5;
    throw std::invalid_argument("unknown dataset kind: " + std::string(name));
}

std::string kind_name(DatasetKind kind) {
    switch (kind) {
    case DatasetKind::swiss_roll: return "swiss_roll";
    case DatasetKind::torus: return "torus";
    case DatasetKind::s_curve: return "s_curve";
    case DatasetKind::helix: return "helix";
    case DatasetKind::mobius: return "mobius";
    case DatasetKind::klein: return "klein";
    case DatasetKind::annulus_obstacle: return "annulus_obstacle";
    case DatasetKind::toy5: return "toy5";
    }
    throw std::invalid_argument("unknown dataset kind");
}

PointCloud generate(const DatasetSpec& spec) {
    if (spec.kind == DatasetKind::toy5) return make_toy5();
    if (spec.n_points < 1) {
        throw std::invalid_argument("n_points must be positive, got " +
                                    std::to_string(spec.n_points));
    }
    return generate_parametric(spec);
}

PointCloud load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);

    std::vector<std::vector<double>> rows;
    bool color_column = false;
    std::string line;
    int line_no = 0;
    std::size_t n_cols = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && rows.empty() && in.peek() == std::ifstream::traits_type::eof()) break;
        const auto cells = split_csv_line(line);

        if (line_no == 1) {
            // Header detection: a first row with any non-numeric cell.
            bool numeric = true;
            double tmp;
            for (const auto& c : cells) {
                if (!parse_double(c, tmp)) { numeric = false; break; }
            }
            if (!numeric) {
                color_column = !cells.empty() && cells.back() == "color";
                n_cols = cells.size();
                continue;
            }
        }
        if (n_cols == 0) n_cols = cells.size();
        if (cells.size() != n_cols) {
            throw std::runtime_error(path + ": row " + std::to_string(line_no) +
                                     ": expected " + std::to_string(n_cols) +
                                     " columns, got " + std::to_string(cells.size()));
        }
        std::vector<double> row(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (!parse_double(cells[c], row[c])) {
                throw std::runtime_error(path + ": row " + std::to_string(line_no) +
                                         ": cannot parse '" + cells[c] + "'");
            }
            if (!std::isfinite(row[c])) {
                throw std::runtime_error(path + ": row " + std::to_string(line_no) +
                                         ": non-finite value '" + cells[c] + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error(path + ": no data rows");

    const std::size_t d = n_cols - (color_column ? 1 : 0);
    if (d == 0) throw std::runtime_error(path + ": no coordinate columns");
    PointCloud cloud;
    cloud.points.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(d));
    if (color_column) cloud.color.resize(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < d; ++c) cloud.points(r, c) = rows[r][c];
        if (color_column) cloud.color[r] = rows[r][d];
    }
    return cloud;
}

void save_csv(const PointCloud& cloud, const std::string& path) {
    if (std::filesystem::is_directory(path)) {
        throw std::runtime_error("cannot write " + path + ": is a directory");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);

    const Eigen::Index n = cloud.size();
    const Eigen::Index d = cloud.dim();
    const bool with_color = !cloud.color.empty();

    std::string buf;
    static const char* kXyz[] = {"x", "y", "z"};
    for (Eigen::Index c = 0; c < d; ++c) {
        if (c > 0) buf += ',';
        if (d <= 3) buf += kXyz[c];
        else buf += "x" + std::to_string(c);
    }
    if (with_color) buf += ",color";
    buf += '\n';
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index c = 0; c < d; ++c) {
            if (c > 0) buf += ',';
            format_double(buf, cloud.points(i, c));
        }
        if (with_color) {
            buf += ',';
            format_double(buf, cloud.color[static_cast<std::size_t>(i)]);
        }
        buf += '\n';
    }
    out << buf;
    if (!out) throw std::runtime_error("write failed for " + path);
}

} // namespace cdp
