#include "cdp/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "cdp/common.hpp"

namespace cdp {

namespace {

double edge_cosine(int a, int b, const ProjectionMatrix& v, const PointCloud& cloud) {
    const Eigen::VectorXd diff = (cloud.points.row(b) - cloud.points.row(a)).transpose();
    return (v.transpose() * diff).norm() / diff.norm();
}

} // namespace

double post_ratio(int i, int j, const ProjectionMatrix& v, const DistanceMatrix& projected_dm,
                  const PointCloud& cloud) {
    if (i == j) throw std::invalid_argument("post_ratio needs distinct vertices");
    const Eigen::VectorXd diff = (cloud.points.row(j) - cloud.points.row(i)).transpose();
    const double sp = projected_dm(i, j);
    if (!(sp > 0.0)) throw std::invalid_argument("projected shortest-path distance is zero");
    return (v.transpose() * diff).norm() / sp;
}

double psi(int i, int j, const ProjectionMatrix& v, const PointCloud& cloud) {
    if (i == j) throw std::invalid_argument("psi needs distinct vertices");
    Eigen::VectorXd u = (cloud.points.row(j) - cloud.points.row(i)).transpose();
    const double norm = u.norm();
    if (norm == 0.0) throw DegenerateInputError("duplicate points in psi");
    u /= norm;
    return (v.transpose() * u).norm();
}

std::pair<double, std::vector<int>> phi_star(int i, int j, const ProjectionMatrix& v,
                                             const PointCloud& cloud, const WeightedGraph& g,
                                             const DistanceMatrix& projected_dm) {
    (void)g;
    std::vector<int> path = recover_path(projected_dm, i, j);
    double phi = 1.0;
    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
        phi = std::min(phi, edge_cosine(path[t], path[t + 1], v, cloud));
    }
    return {phi, std::move(path)};
}

double phi_graph(const WeightedGraph& g, const ProjectionMatrix& v, const PointCloud& cloud) {
    if (g.edges.empty()) throw std::invalid_argument("phi_graph needs a nonempty edge set");
    double phi = kInfDist;
    for (const auto& e : g.edges) {
        phi = std::min(phi, edge_cosine(e.u, e.v, v, cloud));
    }
    return phi;
}

std::vector<CertificateRecord> certify(const AdmissibleSet& ds, const ProjectionMatrix& v,
                                       const PointCloud& cloud, const WeightedGraph& g,
                                       const DistanceMatrix& projected_dm,
                                       std::size_t path_storage_budget) {
    constexpr double kTol = 1e-9;
    std::vector<CertificateRecord> records;
    records.reserve(ds.pairs.size());
    std::size_t stored = 0;
    for (const auto& pr : ds.pairs) {
        CertificateRecord rec;
        rec.i = pr.i;
        rec.j = pr.j;
        rec.r = pr.r;
        rec.r_tilde = post_ratio(pr.i, pr.j, v, projected_dm, cloud);
        rec.psi = psi(pr.i, pr.j, v, cloud);
        auto [phi, path] = phi_star(pr.i, pr.j, v, cloud, g, projected_dm);
        rec.phi_star = phi;
        const double ratio = rec.r_tilde / rec.r;
        rec.holds = (rec.psi - kTol <= ratio) && (ratio <= 1.0 / rec.phi_star + kTol);
        // Memory guard: paths beyond the budget stay recoverable on demand
        // from projected_dm.
        if (stored + path.size() <= path_storage_budget) {
            stored += path.size();
            rec.path = std::move(path);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

void save_certificates_csv(const std::vector<CertificateRecord>& records, const PointCloud& cloud,
                           const std::string& path, const ComponentMap* remap) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);

    const bool named = !cloud.names.empty();
    auto original = [&](int v) { return remap ? remap->kept[v] : v; };
    auto label = [&](int v) {
        const int o = original(v);
        return named ? cloud.names[o] : std::to_string(o);
    };

    std::string buf = "i,j,psi,phi_star,inv_phi_star,r,r_tilde,ratio,path\n";
    char num[64];
    auto append = [&](double x, char sep) {
        std::snprintf(num, sizeof num, "%.6f%c", x, sep);
        buf += num;
    };
    for (const auto& rec : records) {
        buf += label(rec.i);
        buf += ',';
        buf += label(rec.j);
        buf += ',';
        append(rec.psi, ',');
        append(rec.phi_star, ',');
        append(1.0 / rec.phi_star, ',');
        append(rec.r, ',');
        append(rec.r_tilde, ',');
        append(rec.r_tilde / rec.r, ',');
        for (std::size_t t = 0; t < rec.path.size(); ++t) {
            if (t > 0) buf += "->";
            buf += label(rec.path[t]);
        }
        buf += '\n';
    }
    out << buf;
    if (!out) throw std::runtime_error("write failed for " + path);
}

} // namespace cdp
