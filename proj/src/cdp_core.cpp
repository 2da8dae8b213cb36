#include "cdp/cdp_core.hpp"

#include <cmath>
#include <string>

#include "cdp/common.hpp"
#include "cdp/linalg.hpp"

namespace cdp {

PointCloud standardize(const PointCloud& cloud) {
    const Eigen::Index n = cloud.size();
    const Eigen::Index d = cloud.dim();
    if (n < 2) throw std::invalid_argument("standardize needs at least 2 points");

    PointCloud out = cloud;
    for (Eigen::Index c = 0; c < d; ++c) {
        const double mean = cloud.points.col(c).mean();
        const double var = (cloud.points.col(c).array() - mean).square().sum() / static_cast<double>(n);
        if (var == 0.0) {
            throw DegenerateInputError("coordinate " + std::to_string(c) +
                                       " has zero variance; cannot standardize");
        }
        out.points.col(c) = (cloud.points.col(c).array() - mean) / std::sqrt(var);
    }
    return out;
}

std::vector<PairRecord> convexity_ratios(const PointCloud& cloud, const WeightedGraph& g,
                                         const DistanceMatrix& dm) {
    const int n = static_cast<int>(cloud.size());
    if (g.n_vertices != n || dm.n != n) {
        throw std::invalid_argument("cloud, graph, and distance matrix sizes disagree");
    }
    std::vector<PairRecord> records;
    records.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double euclid = (cloud.points.row(j) - cloud.points.row(i)).norm();
            if (euclid == 0.0) {
                throw DegenerateInputError("duplicate points " + std::to_string(i) + " and " +
                                           std::to_string(j));
            }
            const double sp = dm(i, j);
            records.push_back({i, j, euclid, sp, euclid / sp});
        }
    }
    return records;
}

AdmissibleSet admissible_set(const std::vector<PairRecord>& records, double tau) {
    if (!(tau > 0.0 && tau < 1.0)) {
        throw std::invalid_argument("tau must lie in (0, 1)");
    }
    AdmissibleSet ds;
    ds.tau = tau;
    for (const auto& rec : records) {
        if (rec.r <= tau) ds.pairs.push_back(rec);
    }
    if (ds.pairs.empty()) {
        throw EmptyAdmissibleSetError("no admissible pairs at tau=" + std::to_string(tau));
    }
    return ds;
}

double nonconvexity_index(const AdmissibleSet& ds) {
    if (ds.pairs.empty()) throw std::invalid_argument("empty admissible set");
    KahanSum sum;
    for (const auto& rec : ds.pairs) sum.add(rec.r);
    return sum.value() / static_cast<double>(ds.pairs.size());
}

StructureMatrix structure_matrix(const AdmissibleSet& ds, const PointCloud& cloud) {
    if (ds.pairs.empty()) throw std::invalid_argument("empty admissible set");
    const Eigen::Index d = cloud.dim();
    std::vector<KahanSum> acc(static_cast<std::size_t>(d) * d);
    Eigen::VectorXd u(d);
    for (const auto& rec : ds.pairs) {
        u = (cloud.points.row(rec.j) - cloud.points.row(rec.i)).transpose();
        u /= rec.euclid;
        const double w = 1.0 - rec.r;
        for (Eigen::Index a = 0; a < d; ++a) {
            for (Eigen::Index b = 0; b < d; ++b) {
                acc[static_cast<std::size_t>(a) * d + b].add(w * u[a] * u[b]);
            }
        }
    }
    StructureMatrix s(d, d);
    const double inv = 1.0 / static_cast<double>(ds.pairs.size());
    for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) {
            s(a, b) = acc[static_cast<std::size_t>(a) * d + b].value() * inv;
        }
    }
    return s;
}

Spectrum spectrum(const StructureMatrix& s) {
    if (s.rows() != s.cols()) throw std::invalid_argument("structure matrix must be square");
    const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
    const double asym = (s - s.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-9 * scale) {
        throw std::invalid_argument("matrix is not symmetric (max asymmetry " +
                                    std::to_string(asym) + ")");
    }
    SymmetricEigen eig = symmetric_eigen(s);
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        if (eig.values[i] < -1e-10) {
            throw std::invalid_argument("matrix is not positive semidefinite (eigenvalue " +
                                        std::to_string(eig.values[i]) + ")");
        }
        if (eig.values[i] < 0.0) eig.values[i] = 0.0;
    }
    return {std::move(eig.values), std::move(eig.vectors)};
}

ProjectionMatrix projection_matrix(const Spectrum& sp, int k) {
    const Eigen::Index d = sp.eigenvalues.size();
    if (k < 1 || k > d) {
        throw std::invalid_argument("k must satisfy 1 <= k <= d, got k=" + std::to_string(k));
    }
    return sp.eigenvectors.leftCols(k);
}

bool degenerate_cutoff(const Spectrum& sp, int k, double rel_tol) {
    const Eigen::Index d = sp.eigenvalues.size();
    if (k >= d) return false;
    const double scale = std::max(std::abs(sp.eigenvalues[0]), 1e-300);
    return std::abs(sp.eigenvalues[k - 1] - sp.eigenvalues[k]) <= rel_tol * scale;
}

PointCloud project(const PointCloud& cloud, const ProjectionMatrix& v) {
    if (v.rows() != cloud.dim()) {
        throw std::invalid_argument("projection matrix row count does not match cloud dimension");
    }
    PointCloud out;
    out.points = cloud.points * v;
    out.color = cloud.color;
    out.names = cloud.names;
    return out;
}

WeightedGraph projected_graph(const WeightedGraph& g, const PointCloud& cloud,
                              const ProjectionMatrix& v) {
    if (g.n_vertices != static_cast<int>(cloud.size())) {
        throw std::invalid_argument("graph and cloud sizes disagree");
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        const double w =
            (v.transpose() * (cloud.points.row(e.v) - cloud.points.row(e.u)).transpose()).norm();
        if (w == 0.0) {
            throw DegenerateInputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                       ") collapses to zero length under the projection");
        }
        edges.push_back({e.u, e.v, w});
    }
    return WeightedGraph::from_edges(g.n_vertices, std::move(edges));
}

} // namespace cdp
