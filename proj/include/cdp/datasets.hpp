#ifndef CDP_DATASETS_HPP
#define CDP_DATASETS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace cdp {

// N points in R^d, one row per point. color (generator parameter, used for
// plotting) and names are optional; when present they have length N.
struct PointCloud {
    Eigen::MatrixXd points;
    std::vector<double> color;
    std::vector<std::string> names;

    Eigen::Index size() const { return points.rows(); }
    Eigen::Index dim() const { return points.cols(); }
};

enum class DatasetKind {
    swiss_roll,
    torus,
    s_curve,
    helix,
    mobius,
    klein,
    annulus_obstacle,
    toy5,
};

DatasetKind parse_kind(std::string_view name);
std::string kind_name(DatasetKind kind);

// Generator request. Shape parameters default to the values documented in
// the README; toy5 ignores n_points and seed (always the same five points).
struct DatasetSpec {
    DatasetKind kind = DatasetKind::swiss_roll;
    int n_points = 1000;
    std::uint64_t seed = 0;

    double swiss_t_min = 1.5 * 3.14159265358979323846;
    double swiss_t_max = 4.5 * 3.14159265358979323846;
    double swiss_height = 21.0;

    double torus_major = 2.0;
    double torus_minor = 0.5;

    double s_curve_height = 2.0;

    double helix_radius = 1.0;
    double helix_turns = 2.0;
    double helix_pitch = 0.3;

    double mobius_radius = 1.0;
    double mobius_half_width = 0.4;

    double klein_radius = 2.0;

    double annulus_r_inner = 1.0;
    double annulus_r_outer = 2.0;
    double annulus_obstacle_x = 1.5;
    double annulus_obstacle_y = 0.0;
    double annulus_obstacle_radius = 0.5;
    double annulus_thickness = 0.2;
};

// Deterministic: the same spec yields a bit-identical cloud.
PointCloud generate(const DatasetSpec& spec);

// CSV: comma delimiter, '.' decimal separator, optional single header row
// (detected by a non-numeric first row). A trailing column named "color"
// populates the color field. Errors report the offending 1-based row.
PointCloud load_csv(const std::string& path);

// Writes coordinates (header x,y,z,... plus trailing color column when
// present) with shortest round-trip formatting; load_csv(save_csv(c))
// reproduces the points exactly.
void save_csv(const PointCloud& cloud, const std::string& path);

} // namespace cdp

#endif
