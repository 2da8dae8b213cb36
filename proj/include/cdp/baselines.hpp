#ifndef CDP_BASELINES_HPP
#define CDP_BASELINES_HPP

#include <Eigen/Dense>

#include "cdp/cdp_core.hpp"
#include "cdp/datasets.hpp"

namespace cdp {

struct BaselineResult {
    std::string method;      // "pca"
    Eigen::MatrixXd v;       // d x k, orthonormal columns
    PointCloud projected;
};

// Top-k eigenvectors of the sample covariance of mean-centered points,
// same eigenvector sign convention as spectrum().
BaselineResult pca_fit(const PointCloud& cloud, int k);

} // namespace cdp

#endif
