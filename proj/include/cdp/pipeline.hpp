#ifndef CDP_PIPELINE_HPP
#define CDP_PIPELINE_HPP

#include <string>
#include <vector>

#include "cdp/baselines.hpp"
#include "cdp/cdp_core.hpp"
#include "cdp/certificates.hpp"
#include "cdp/metrics.hpp"

namespace cdp {

enum class Method { cdp, pca };

struct PipelineConfig {
    int k_nn = 10;
    double tau = 0.8;
    int k = 2;
    bool standardize = true;
    Method method = Method::cdp;
};

// Projection-independent pipeline state: standardized coordinates, mutual
// k-NN graph reduced to its giant component, APSP, detour ratios, the
// admissible set, and the structure-matrix spectrum.
struct AnalysisState {
    PointCloud working;        // full cloud in pipeline coordinates
    WeightedGraph graph;       // giant component, renumbered
    ComponentMap comp;
    PointCloud kept;           // working restricted to graph vertices
    DistanceMatrix dm;
    std::vector<PairRecord> ratios;
    AdmissibleSet admissible;
    double c_sp = 0.0;
    StructureMatrix snc;
    Spectrum spec;
    std::vector<std::string> warnings;
    std::map<std::string, double> timings_sec;
};

AnalysisState analyze(const PointCloud& cloud, const PipelineConfig& config);

// Everything downstream of a fitted V: projection, projected graph and
// APSP, certificates, post ratios for all pairs, and the metrics report.
struct ProjectionOutcome {
    ProjectionMatrix v;
    PointCloud projected;      // all points of the working cloud
    WeightedGraph pgraph;
    DistanceMatrix pdm;
    std::vector<CertificateRecord> certificates;
    std::vector<double> post_ratios;   // all kept pairs, i < j lexicographic
    double phi_g = 0.0;
    MetricsReport report;
};

ProjectionOutcome apply_projection(const AnalysisState& state, const ProjectionMatrix& v,
                                   const PipelineConfig& config, const std::string& method_name);

// Runs the §4.3 protocol with the baseline's V on an existing analysis.
MetricsReport evaluate_baseline(const BaselineResult& baseline, const AnalysisState& state,
                                const PipelineConfig& config);

struct PipelineResult {
    AnalysisState state;
    ProjectionOutcome outcome;
};

// Algorithm steps 1-8 followed by certification and metrics.
PipelineResult run_pipeline(const PointCloud& cloud, const PipelineConfig& config);

} // namespace cdp

#endif
