#ifndef CDP_LINALG_HPP
#define CDP_LINALG_HPP

#include <Eigen/Dense>

namespace cdp {

struct SymmetricEigen {
    Eigen::VectorXd values;    // descending
    Eigen::MatrixXd vectors;   // orthonormal columns, aligned to values
};

// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
// Eigenvalues are sorted descending; each eigenvector column is signed so
// that its entry of largest absolute value is positive (ties break toward
// the earlier index).
SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& m);

} // namespace cdp

#endif
