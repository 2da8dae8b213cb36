#ifndef CDP_CERTIFICATES_HPP
#define CDP_CERTIFICATES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cdp/cdp_core.hpp"

namespace cdp {

// Per-pair a-posteriori certificate: psi <= r_tilde/r <= 1/phi_star.
struct CertificateRecord {
    int i;
    int j;
    double r;          // pre-projection ratio
    double r_tilde;    // post-projection ratio
    double psi;        // projected norm of the unit chord, in [0, 1]
    double phi_star;   // min edge cosine along the projected shortest path
    std::vector<int> path;   // recovered projected shortest path (may be
                             // empty when the storage budget is exceeded)
    bool holds;
};

// r_tilde = ||V^T (p_j - p_i)|| / S~(i, j) on the projected graph.
double post_ratio(int i, int j, const ProjectionMatrix& v,
                  const DistanceMatrix& projected_dm, const PointCloud& cloud);

// psi = ||V^T u_ij|| for the unit chord u_ij.
double psi(int i, int j, const ProjectionMatrix& v, const PointCloud& cloud);

// Recovers the projected shortest path via parent pointers and returns the
// minimum over its edges (as vectors in the pipeline's coordinate space) of
// ||V^T e|| / ||e||, together with the path itself.
std::pair<double, std::vector<int>> phi_star(int i, int j,
                                             const ProjectionMatrix& v,
                                             const PointCloud& cloud,
                                             const WeightedGraph& g,
                                             const DistanceMatrix& projected_dm);

// Uniform constant: min over ALL edges of ||V^T e|| / ||e||.
double phi_graph(const WeightedGraph& g, const ProjectionMatrix& v,
                 const PointCloud& cloud);

// One record per admissible pair; holds is evaluated with tolerance 1e-9.
// Paths are stored until the total stored vertex count would exceed
// path_storage_budget; later records carry an empty path and can be
// recovered on demand from projected_dm.
std::vector<CertificateRecord> certify(const AdmissibleSet& ds,
                                       const ProjectionMatrix& v,
                                       const PointCloud& cloud,
                                       const WeightedGraph& g,
                                       const DistanceMatrix& projected_dm,
                                       std::size_t path_storage_budget = std::size_t{1} << 24);

// CSV export mirroring the certificate table: i, j, psi, phi_star,
// inv_phi_star, r, r_tilde, ratio, path. Vertex ids map back through remap
// when given; path labels use point names when available.
void save_certificates_csv(const std::vector<CertificateRecord>& records,
                           const PointCloud& cloud, const std::string& path,
                           const ComponentMap* remap = nullptr);

} // namespace cdp

#endif
