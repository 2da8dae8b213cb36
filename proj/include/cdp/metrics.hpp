#ifndef CDP_METRICS_HPP
#define CDP_METRICS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cdp/cdp_core.hpp"
#include "cdp/certificates.hpp"

namespace cdp {

struct MarkovEntry {
    double a;
    double lower_bound;   // on P{Z >= 1 - a}
};

// Aggregated verification protocol output. render_report serializes the
// deterministic fields (docs/report_schema.md); timings stay out of the
// serialized form so identical runs produce identical bytes.
struct MetricsReport {
    // parameters
    std::string method;
    bool standardized = false;
    int k_nn = 0;
    double tau = 0.0;
    int k = 0;

    // input / graph
    int n_points = 0;
    int dim = 0;
    int n_vertices = 0;
    int n_edges = 0;
    int giant_size = 0;
    std::vector<int> dropped_vertices;

    // pre-projection index
    std::size_t n_pairs = 0;
    std::size_t n_admissible = 0;
    double c_sp = 0.0;

    // spectrum
    std::vector<double> eigenvalues;
    double mu_k = 0.0;

    // certificates
    std::size_t n_hold = 0;
    double phi_g = 0.0;
    double q10_psi = 0.0;
    double q90_inv_phi_star = 0.0;
    double coverage_lower = 0.0;    // fraction with q10(psi) <= r~/r
    double coverage_upper = 0.0;    // fraction with r~/r <= q90(1/phi*)
    double coverage_joint = 0.0;

    // detour errors
    double c_sp_prime = 0.0;
    double fixed_error = 0.0;       // relative
    std::size_t n_reselected = 0;
    bool reselected_defined = false;
    double c_sp_dprime = 0.0;
    double reselected_error = 0.0;

    std::vector<MarkovEntry> markov;
    std::vector<std::string> warnings;

    std::map<std::string, double> timings_sec;   // not serialized
};

// (i) fixed-pairs detour error: mean r_tilde over D* and its relative
// deviation from the pre-projection index.
std::pair<double, double> fixed_pairs_error(const AdmissibleSet& ds,
                                            const std::vector<CertificateRecord>& records);

struct Reselection {
    std::vector<std::pair<int, int>> pairs;   // D*' = {(i,j): r_tilde <= tau}
    double c_sp_dprime = 0.0;
    double error = 0.0;
    bool defined = false;   // false when D*' is empty
};

// (ii) reselected-pairs detour error. all_post_ratios holds r_tilde for all
// unordered pairs i < j in lexicographic order over n vertices.
Reselection reselected_pairs_error(const std::vector<double>& all_post_ratios,
                                   int n_vertices, double tau, double c_sp);

// Nearest-rank quantile x_(ceil(p n)) at p = num/den on ascending values;
// the index is computed in integer arithmetic.
double nearest_rank_quantile(std::vector<double> values, long num, long den);

// (iii) q_{0.10}(psi) and q_{0.90}(1/phi_star) across the records.
std::pair<double, double> certificate_quantiles(const std::vector<CertificateRecord>& records);

// (iv) mu_k = sum of top-k eigenvalues / total.
double spectral_capture(const Spectrum& sp, int k);

// Captured direction energy of an arbitrary orthonormal V on the
// detour-weighted empirical distribution: sum (1-r) ||V^T u||^2 / sum (1-r).
// Coincides with spectral_capture when V spans the top-k eigenvectors.
double captured_energy(const AdmissibleSet& ds, const PointCloud& cloud,
                       const ProjectionMatrix& v);

// Lower bound on P{Z >= 1-a} from Markov's inequality, clamped at 0.
double markov_bound(double mu_k, double a);

// Serializes the stable fields as an indented key-value tree with fixed
// field order (see docs/report_schema.md).
std::string render_report(const MetricsReport& report);

} // namespace cdp

#endif
