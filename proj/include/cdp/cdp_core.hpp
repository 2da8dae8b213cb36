#ifndef CDP_CDP_CORE_HPP
#define CDP_CDP_CORE_HPP

#include <vector>

#include <Eigen/Dense>

#include "cdp/datasets.hpp"
#include "cdp/graph.hpp"
#include "cdp/shortest_paths.hpp"

namespace cdp {

// One unordered pair (i < j): Euclidean distance, graph shortest-path
// distance, and the detour ratio r = euclid / sp in (0, 1].
struct PairRecord {
    int i;
    int j;
    double euclid;
    double sp;
    double r;
};

struct AdmissibleSet {
    double tau = 0.0;
    std::vector<PairRecord> pairs;   // every member has r <= tau
};

// d x d symmetric PSD matrix: mean of (1 - r) u u^T over admissible pairs.
using StructureMatrix = Eigen::MatrixXd;

struct Spectrum {
    Eigen::VectorXd eigenvalues;    // descending, clamped at zero
    Eigen::MatrixXd eigenvectors;   // orthonormal columns
};

// d x k matrix of the top-k eigenvectors.
using ProjectionMatrix = Eigen::MatrixXd;

// Zero mean, unit variance per coordinate (population convention, 1/N).
// A zero-variance coordinate is an error naming that coordinate.
PointCloud standardize(const PointCloud& cloud);

// One record per unordered pair i < j over the graph's vertex set.
std::vector<PairRecord> convexity_ratios(const PointCloud& cloud,
                                         const WeightedGraph& g,
                                         const DistanceMatrix& dm);

// Inclusive filter r <= tau, original order preserved. Empty result throws
// EmptyAdmissibleSetError.
AdmissibleSet admissible_set(const std::vector<PairRecord>& records, double tau);

// Mean detour ratio over the admissible set (compensated summation).
double nonconvexity_index(const AdmissibleSet& ds);

StructureMatrix structure_matrix(const AdmissibleSet& ds, const PointCloud& cloud);

// Eigendecomposition of the structure matrix, descending. Tiny negative
// eigenvalues (>= -1e-10) are clamped to zero; anything below that is an
// error, as is a non-symmetric input.
Spectrum spectrum(const StructureMatrix& s);

ProjectionMatrix projection_matrix(const Spectrum& sp, int k);

// True when the spectral cutoff lambda_k == lambda_{k+1} (projection
// subspace not unique); reported as a warning downstream.
bool degenerate_cutoff(const Spectrum& sp, int k, double rel_tol = 1e-12);

// p' = V^T p; color and names carry over.
PointCloud project(const PointCloud& cloud, const ProjectionMatrix& v);

// Same edge set, weights w'(u,v) = ||V^T (p_v - p_u)||. An edge collapsing
// to zero length is an error (projected shortest paths become degenerate).
WeightedGraph projected_graph(const WeightedGraph& g, const PointCloud& cloud,
                              const ProjectionMatrix& v);

} // namespace cdp

#endif
