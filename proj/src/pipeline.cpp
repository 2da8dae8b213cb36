#include "cdp/pipeline.hpp"

#include <chrono>

#include "cdp/common.hpp"

namespace cdp {

namespace {

class StageTimer {
public:
    explicit StageTimer(std::map<std::string, double>& sink) : sink_(sink) {}
    void lap(const std::string& name) {
        const auto now = Clock::now();
        sink_[name] = std::chrono::duration<double>(now - last_).count();
        last_ = now;
    }

private:
    using Clock = std::chrono::steady_clock;
    std::map<std::string, double>& sink_;
    Clock::time_point last_ = Clock::now();
};

PointCloud subset(const PointCloud& cloud, const std::vector<int>& kept) {
    PointCloud out;
    out.points.resize(static_cast<Eigen::Index>(kept.size()), cloud.dim());
    for (std::size_t i = 0; i < kept.size(); ++i) out.points.row(i) = cloud.points.row(kept[i]);
    if (!cloud.color.empty()) {
        out.color.reserve(kept.size());
        for (int id : kept) out.color.push_back(cloud.color[id]);
    }
    if (!cloud.names.empty()) {
        out.names.reserve(kept.size());
        for (int id : kept) out.names.push_back(cloud.names[id]);
    }
    return out;
}

MetricsReport build_report(const AnalysisState& state, const PipelineConfig& config,
                           const std::string& method_name, const ProjectionMatrix& v,
                           const std::vector<CertificateRecord>& certs,
                           const std::vector<double>& post_ratios, double phi_g) {
    MetricsReport r;
    r.method = method_name;
    r.standardized = config.standardize;
    r.k_nn = config.k_nn;
    r.tau = config.tau;
    r.k = static_cast<int>(v.cols());

    r.n_points = static_cast<int>(state.working.size());
    r.dim = static_cast<int>(state.working.dim());
    r.n_vertices = state.graph.n_vertices;
    r.n_edges = static_cast<int>(state.graph.edges.size());
    r.giant_size = static_cast<int>(state.comp.kept.size());
    r.dropped_vertices = state.comp.dropped();

    r.n_pairs = state.ratios.size();
    r.n_admissible = state.admissible.pairs.size();
    r.c_sp = state.c_sp;

    r.eigenvalues.assign(state.spec.eigenvalues.data(),
                         state.spec.eigenvalues.data() + state.spec.eigenvalues.size());
    // For the CDP projection Eq-6 capture equals the eigenvalue-sum ratio;
    // an arbitrary baseline V needs the direct weighted mean.
    r.mu_k = method_name == "cdp" ? spectral_capture(state.spec, r.k)
                                  : captured_energy(state.admissible, state.kept, v);

    r.phi_g = phi_g;
    std::tie(r.q10_psi, r.q90_inv_phi_star) = certificate_quantiles(certs);
    std::size_t n_hold = 0, cov_lo = 0, cov_hi = 0, cov_joint = 0;
    for (const auto& c : certs) {
        if (c.holds) ++n_hold;
        const double ratio = c.r_tilde / c.r;
        const bool lo = ratio >= r.q10_psi - 1e-12;
        const bool hi = ratio <= r.q90_inv_phi_star + 1e-12;
        cov_lo += lo;
        cov_hi += hi;
        cov_joint += lo && hi;
    }
    r.n_hold = n_hold;
    const double n_certs = static_cast<double>(certs.size());
    r.coverage_lower = static_cast<double>(cov_lo) / n_certs;
    r.coverage_upper = static_cast<double>(cov_hi) / n_certs;
    r.coverage_joint = static_cast<double>(cov_joint) / n_certs;

    std::tie(r.c_sp_prime, r.fixed_error) = fixed_pairs_error(state.admissible, certs);
    const Reselection resel =
        reselected_pairs_error(post_ratios, state.graph.n_vertices, config.tau, state.c_sp);
    r.n_reselected = resel.pairs.size();
    r.reselected_defined = resel.defined;
    r.c_sp_dprime = resel.c_sp_dprime;
    r.reselected_error = resel.error;

    for (const double a : {0.10, 0.25, 0.50}) {
        r.markov.push_back({a, markov_bound(r.mu_k, a)});
    }
    const double a_star = (1.0 - r.mu_k) / 0.1;   // smallest a with bound >= 0.9
    if (a_star > 0.0 && a_star < 1.0) {
        r.markov.push_back({a_star, markov_bound(r.mu_k, a_star)});
    }

    r.warnings = state.warnings;
    if (method_name == "cdp" && degenerate_cutoff(state.spec, r.k)) {
        r.warnings.push_back("degenerate spectral cutoff: lambda_k equals lambda_{k+1}; "
                             "projection subspace is not unique");
    }
    if (!resel.defined) {
        r.warnings.push_back("empty reselected set: no pair has r_tilde <= tau after projection");
    }
    r.timings_sec = state.timings_sec;
    return r;
}

} // namespace

AnalysisState analyze(const PointCloud& cloud, const PipelineConfig& config) {
    AnalysisState state;
    StageTimer timer(state.timings_sec);

    state.working = config.standardize ? standardize(cloud) : cloud;
    timer.lap("standardize");

    WeightedGraph full = mutual_knn(state.working, config.k_nn);
    timer.lap("knn_graph");

    std::tie(state.graph, state.comp) = giant_component(full);
    state.kept = subset(state.working, state.comp.kept);
    if (!state.comp.is_identity()) {
        state.warnings.push_back("graph disconnected: kept giant component of " +
                                 std::to_string(state.comp.kept.size()) + " of " +
                                 std::to_string(full.n_vertices) + " vertices");
    }
    timer.lap("giant_component");

    state.dm = apsp(state.graph);
    timer.lap("apsp");

    state.ratios = convexity_ratios(state.kept, state.graph, state.dm);
    state.admissible = admissible_set(state.ratios, config.tau);
    state.c_sp = nonconvexity_index(state.admissible);
    timer.lap("ratios");

    state.snc = structure_matrix(state.admissible, state.kept);
    state.spec = spectrum(state.snc);
    timer.lap("structure_spectrum");
    return state;
}

ProjectionOutcome apply_projection(const AnalysisState& state, const ProjectionMatrix& v,
                                   const PipelineConfig& config, const std::string& method_name) {
    ProjectionOutcome out;
    out.v = v;
    auto timings = state.timings_sec;
    StageTimer timer(timings);

    out.projected = project(state.working, v);
    out.pgraph = projected_graph(state.graph, state.kept, v);
    timer.lap("project");

    out.pdm = apsp(out.pgraph);
    timer.lap("projected_apsp");

    out.certificates = certify(state.admissible, v, state.kept, state.graph, out.pdm);
    out.phi_g = phi_graph(state.graph, v, state.kept);
    timer.lap("certify");

    const int n = state.graph.n_vertices;
    out.post_ratios.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Eigen::VectorXd diff =
                (state.kept.points.row(j) - state.kept.points.row(i)).transpose();
            out.post_ratios.push_back((v.transpose() * diff).norm() / out.pdm(i, j));
        }
    }
    timer.lap("post_ratios");

    out.report = build_report(state, config, method_name, v, out.certificates, out.post_ratios,
                              out.phi_g);
    out.report.timings_sec = std::move(timings);
    return out;
}

MetricsReport evaluate_baseline(const BaselineResult& baseline, const AnalysisState& state,
                                const PipelineConfig& config) {
    return apply_projection(state, baseline.v, config, baseline.method).report;
}

PipelineResult run_pipeline(const PointCloud& cloud, const PipelineConfig& config) {
    PipelineResult result;
    result.state = analyze(cloud, config);
    ProjectionMatrix v;
    std::string method_name;
    if (config.method == Method::cdp) {
        v = projection_matrix(result.state.spec, config.k);
        method_name = "cdp";
    } else {
        BaselineResult baseline = pca_fit(result.state.kept, config.k);
        v = std::move(baseline.v);
        method_name = baseline.method;
    }
    result.outcome = apply_projection(result.state, v, config, method_name);
    return result;
}

} // namespace cdp
