#include "cdp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "cdp/common.hpp"

namespace cdp {

std::pair<double, double> fixed_pairs_error(const AdmissibleSet& ds,
                                            const std::vector<CertificateRecord>& records) {
    if (records.empty() || records.size() != ds.pairs.size()) {
        throw std::invalid_argument("certificates and admissible set disagree");
    }
    const double c_sp = nonconvexity_index(ds);
    KahanSum sum;
    for (const auto& rec : records) sum.add(rec.r_tilde);
    const double c_sp_prime = sum.value() / static_cast<double>(records.size());
    return {c_sp_prime, std::abs(c_sp - c_sp_prime) / c_sp};
}

Reselection reselected_pairs_error(const std::vector<double>& all_post_ratios, int n_vertices,
                                   double tau, double c_sp) {
    const std::size_t expected = static_cast<std::size_t>(n_vertices) * (n_vertices - 1) / 2;
    if (all_post_ratios.size() != expected) {
        throw std::invalid_argument("post-ratio vector must cover all unordered pairs");
    }
    Reselection out;
    KahanSum sum;
    std::size_t idx = 0;
    for (int i = 0; i < n_vertices; ++i) {
        for (int j = i + 1; j < n_vertices; ++j, ++idx) {
            if (all_post_ratios[idx] <= tau) {
                out.pairs.emplace_back(i, j);
                sum.add(all_post_ratios[idx]);
            }
        }
    }
    if (out.pairs.empty()) return out;   // undefined, flagged by defined=false
    out.defined = true;
    out.c_sp_dprime = sum.value() / static_cast<double>(out.pairs.size());
    out.error = std::abs(c_sp - out.c_sp_dprime) / c_sp;
    return out;
}

double nearest_rank_quantile(std::vector<double> values, long num, long den) {
    if (values.empty()) throw std::invalid_argument("quantile of empty sample");
    if (num <= 0 || den <= 0 || num > den) throw std::invalid_argument("quantile level out of range");
    std::sort(values.begin(), values.end());
    const long n = static_cast<long>(values.size());
    long idx = (num * n + den - 1) / den;   // ceil(p * n) without float error
    if (idx < 1) idx = 1;
    return values[static_cast<std::size_t>(idx - 1)];
}

std::pair<double, double> certificate_quantiles(const std::vector<CertificateRecord>& records) {
    if (records.empty()) throw std::invalid_argument("no certificate records");
    std::vector<double> psis, inv_phis;
    psis.reserve(records.size());
    inv_phis.reserve(records.size());
    for (const auto& rec : records) {
        psis.push_back(rec.psi);
        inv_phis.push_back(1.0 / rec.phi_star);
    }
    return {nearest_rank_quantile(std::move(psis), 1, 10),
            nearest_rank_quantile(std::move(inv_phis), 9, 10)};
}

double spectral_capture(const Spectrum& sp, int k) {
    const Eigen::Index d = sp.eigenvalues.size();
    if (k < 1 || k > d) throw std::invalid_argument("k out of range");
    const double total = sp.eigenvalues.sum();
    if (total <= 0.0) throw std::invalid_argument("all-zero spectrum");
    return sp.eigenvalues.head(k).sum() / total;
}

double captured_energy(const AdmissibleSet& ds, const PointCloud& cloud,
                       const ProjectionMatrix& v) {
    if (ds.pairs.empty()) throw std::invalid_argument("empty admissible set");
    KahanSum num, den;
    Eigen::VectorXd u(cloud.dim());
    for (const auto& rec : ds.pairs) {
        u = (cloud.points.row(rec.j) - cloud.points.row(rec.i)).transpose();
        u /= rec.euclid;
        const double w = 1.0 - rec.r;
        num.add(w * (v.transpose() * u).squaredNorm());
        den.add(w);
    }
    if (den.value() <= 0.0) throw std::invalid_argument("zero total detour weight");
    return num.value() / den.value();
}

double markov_bound(double mu_k, double a) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("a must lie in (0, 1)");
    return std::max(0.0, 1.0 - (1.0 - mu_k) / a);
}

namespace {

void kv(std::string& out, const char* key, const std::string& value, int indent = 1) {
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    out += key;
    out += ": ";
    out += value;
    out += '\n';
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

// Percentages print with half-up rounding at 2 decimals.
std::string fmt_pct(double fraction) {
    const long long v = std::llround(fraction * 100.0 * 100.0);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%lld.%02lld", v / 100, v % 100);
    return buf;
}

} // namespace

std::string render_report(const MetricsReport& r) {
    std::string out;
    out += "cdp_report_version: 1\n";
    out += "parameters:\n";
    kv(out, "method", r.method);
    kv(out, "standardize", r.standardized ? "true" : "false");
    kv(out, "k_nn", std::to_string(r.k_nn));
    kv(out, "tau", fmt(r.tau));
    kv(out, "k", std::to_string(r.k));
    out += "input:\n";
    kv(out, "n_points", std::to_string(r.n_points));
    kv(out, "dim", std::to_string(r.dim));
    out += "graph:\n";
    kv(out, "n_vertices", std::to_string(r.n_vertices));
    kv(out, "n_edges", std::to_string(r.n_edges));
    kv(out, "giant_component", std::to_string(r.giant_size));
    kv(out, "n_dropped", std::to_string(r.dropped_vertices.size()));
    if (r.dropped_vertices.empty()) {
        kv(out, "dropped", "(none)");
    } else {
        std::string ids;
        for (std::size_t i = 0; i < r.dropped_vertices.size(); ++i) {
            if (i > 0) ids += ' ';
            ids += std::to_string(r.dropped_vertices[i]);
        }
        kv(out, "dropped", ids);
    }
    out += "pairs:\n";
    kv(out, "n_pairs", std::to_string(r.n_pairs));
    kv(out, "n_admissible", std::to_string(r.n_admissible));
    kv(out, "c_sp", fmt(r.c_sp));
    out += "spectrum:\n";
    kv(out, "n_eigenvalues", std::to_string(r.eigenvalues.size()));
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
        kv(out, ("eigenvalue_" + std::to_string(i)).c_str(), fmt(r.eigenvalues[i]));
    }
    kv(out, "mu_k", fmt(r.mu_k));
    out += "certificates:\n";
    kv(out, "n_records", std::to_string(r.n_admissible));
    kv(out, "n_hold", std::to_string(r.n_hold));
    kv(out, "all_hold", r.n_hold == r.n_admissible ? "true" : "false");
    kv(out, "phi_g", fmt(r.phi_g));
    kv(out, "q10_psi", fmt(r.q10_psi));
    kv(out, "q90_inv_phi_star", fmt(r.q90_inv_phi_star));
    kv(out, "coverage_lower_pct", fmt_pct(r.coverage_lower));
    kv(out, "coverage_upper_pct", fmt_pct(r.coverage_upper));
    kv(out, "coverage_joint_pct", fmt_pct(r.coverage_joint));
    out += "detour_errors:\n";
    kv(out, "c_sp_fixed", fmt(r.c_sp_prime));
    kv(out, "fixed_error_pct", fmt_pct(r.fixed_error));
    kv(out, "n_reselected", std::to_string(r.n_reselected));
    kv(out, "c_sp_reselected", r.reselected_defined ? fmt(r.c_sp_dprime) : "undefined");
    kv(out, "reselected_error_pct", r.reselected_defined ? fmt_pct(r.reselected_error) : "undefined");
    out += "markov:\n";
    kv(out, "n_entries", std::to_string(r.markov.size()));
    for (std::size_t i = 0; i < r.markov.size(); ++i) {
        const auto& e = r.markov[i];
        kv(out, ("entry_" + std::to_string(i)).c_str(),
           "a=" + fmt(e.a) + " p_lower_bound=" + fmt(e.lower_bound) +
               " sqrt_z_min=" + fmt(std::sqrt(1.0 - e.a)));
    }
    out += "warnings:\n";
    kv(out, "n_warnings", std::to_string(r.warnings.size()));
    for (std::size_t i = 0; i < r.warnings.size(); ++i) {
        kv(out, ("warning_" + std::to_string(i)).c_str(), r.warnings[i]);
    }
    return out;
}

} // namespace cdp
