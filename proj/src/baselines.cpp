#include "cdp/baselines.hpp"

#include <stdexcept>

#include "cdp/linalg.hpp"

namespace cdp {

BaselineResult pca_fit(const PointCloud& cloud, int k) {
    const Eigen::Index n = cloud.size();
    const Eigen::Index d = cloud.dim();
    if (n < 2) throw std::invalid_argument("pca_fit needs at least 2 points");
    if (k < 1 || k > d) throw std::invalid_argument("k must satisfy 1 <= k <= d");

    const Eigen::RowVectorXd mean = cloud.points.colwise().mean();
    const Eigen::MatrixXd centered = cloud.points.rowwise() - mean;
    const Eigen::MatrixXd cov = centered.transpose() * centered / static_cast<double>(n - 1);

    const SymmetricEigen eig = symmetric_eigen(cov);
    BaselineResult out;
    out.method = "pca";
    out.v = eig.vectors.leftCols(k);
    out.projected = project(cloud, out.v);
    return out;
}

} // namespace cdp
