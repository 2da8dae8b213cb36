#include <doctest.h>

#include <sstream>

#include "cdp/metrics.hpp"
#include "cdp/pipeline.hpp"
#include "oracles.hpp"
#include "toy_golden.hpp"

using namespace cdp;

namespace {

const PipelineResult& toy_run() {
    static PipelineResult result = run_pipeline(toy::cloud(), toy::config());
    return result;
}

} // namespace

TEST_CASE("fixed-pairs error matches the frozen reference values") {
    const auto& run = toy_run();
    const auto [c_sp_prime, error] = fixed_pairs_error(run.state.admissible,
                                                       run.outcome.certificates);
    CHECK(c_sp_prime == doctest::Approx(toy::kCspFixed).epsilon(1e-3));
    CHECK(error * 100.0 == doctest::Approx(toy::kFixedErrorPct).epsilon(0.05));

    // independent mean over the five frozen post-projection ratios
    double mean = 0.0;
    for (const auto& row : toy::kCertificates) mean += row.r_tilde;
    mean /= 5.0;
    CHECK(c_sp_prime == doctest::Approx(mean).epsilon(1e-4));
}

TEST_CASE("reselection keeps only pairs below tau after projection") {
    const auto& run = toy_run();
    const Reselection resel = reselected_pairs_error(run.outcome.post_ratios,
                                                     run.state.graph.n_vertices, 0.75,
                                                     run.state.c_sp);
    REQUIRE(resel.defined);
    CHECK(resel.pairs.size() == toy::kNReselected);
    CHECK(resel.pairs == std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {3, 4}});
    CHECK(resel.c_sp_dprime == doctest::Approx(toy::kCspReselected).epsilon(1e-3));
    CHECK(resel.error * 100.0 == doctest::Approx(toy::kReselectedErrorPct).epsilon(0.05));
}

TEST_CASE("k=d leaves both detour errors at zero") {
    PipelineConfig config = toy::config();
    config.k = 3;
    const PipelineResult run = run_pipeline(toy::cloud(), config);
    CHECK(run.outcome.report.fixed_error <= 1e-10);
    REQUIRE(run.outcome.report.reselected_defined);
    CHECK(run.outcome.report.reselected_error <= 1e-10);
    CHECK(run.outcome.report.n_reselected == run.state.admissible.pairs.size());
}

TEST_CASE("empty reselection is reported, not fatal") {
    const std::vector<double> ratios{0.9, 0.8, 0.95};   // 3 pairs of a triangle
    const Reselection resel = reselected_pairs_error(ratios, 3, 0.5, 0.4);
    CHECK(!resel.defined);
    CHECK(resel.pairs.empty());
}

TEST_CASE("nearest-rank quantiles use exact integer indexing") {
    std::vector<double> ten;
    for (int i = 1; i <= 10; ++i) ten.push_back(i / 10.0);
    CHECK(nearest_rank_quantile(ten, 1, 10) == 0.1);   // ceil(1) = 1st
    CHECK(nearest_rank_quantile(ten, 9, 10) == 0.9);
    CHECK(nearest_rank_quantile({3.5}, 1, 10) == 3.5);
    CHECK(nearest_rank_quantile({3.5}, 9, 10) == 3.5);
    CHECK_THROWS_AS(nearest_rank_quantile({}, 1, 10), std::invalid_argument);
}

TEST_CASE("toy certificate quantiles match the frozen reference values") {
    const auto& run = toy_run();
    const auto [q10, q90] = certificate_quantiles(run.outcome.certificates);
    CHECK(q10 == doctest::Approx(toy::kQ10Psi).epsilon(1e-4));
    CHECK(q90 == doctest::Approx(toy::kQ90InvPhiStar).epsilon(1e-4));
    CHECK(q10 <= 1.0 + 1e-12);
    CHECK(q90 >= 1.0 - 1e-12);
}

TEST_CASE("spectral capture matches both the eigenvalue ratio and the direct mean") {
    const auto& run = toy_run();
    const double mu2 = spectral_capture(run.state.spec, 2);
    CHECK(mu2 == doctest::Approx(toy::kMu2).epsilon(1e-4));
    CHECK(spectral_capture(run.state.spec, 3) == doctest::Approx(1.0).epsilon(1e-12));

    const double direct = captured_energy(run.state.admissible, run.state.kept, run.outcome.v);
    CHECK(std::abs(mu2 - direct) <= 1e-9);

    Spectrum zero;
    zero.eigenvalues = Eigen::VectorXd::Zero(3);
    zero.eigenvectors = Eigen::MatrixXd::Identity(3, 3);
    CHECK_THROWS_AS(spectral_capture(zero, 2), std::invalid_argument);
}

TEST_CASE("markov bound clamps and hits the 90% target example") {
    CHECK(markov_bound(0.9573, 0.427) == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(std::sqrt(1.0 - 0.427) == doctest::Approx(0.7570).epsilon(1e-4));
    CHECK(markov_bound(1.0, 0.3) == 1.0);
    CHECK(markov_bound(0.5, 0.25) == 0.0);
    CHECK_THROWS_AS(markov_bound(0.9, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(markov_bound(0.9, 1.0), std::invalid_argument);
}

TEST_CASE("markov bound verifies empirically by exhaustive weighted enumeration") {
    auto verify = [](const PipelineResult& run) {
        const auto& ds = run.state.admissible;
        double total_weight = 0.0;
        for (const auto& rec : ds.pairs) total_weight += 1.0 - rec.r;
        const double mu = run.outcome.report.mu_k;
        for (const double a : {0.05, 0.1, 0.25, 0.427, 0.5, 0.9}) {
            double hit_weight = 0.0;
            for (std::size_t t = 0; t < ds.pairs.size(); ++t) {
                const Eigen::VectorXd diff =
                    (run.state.kept.points.row(ds.pairs[t].j) -
                     run.state.kept.points.row(ds.pairs[t].i))
                        .transpose();
                const double z = (run.outcome.v.transpose() * diff).squaredNorm() /
                                 diff.squaredNorm();
                if (z >= 1.0 - a) hit_weight += 1.0 - ds.pairs[t].r;
            }
            CHECK(hit_weight / total_weight >= markov_bound(mu, a) - 1e-9);
        }
    };
    verify(toy_run());

    DatasetSpec spec;
    spec.kind = DatasetKind::s_curve;
    spec.n_points = 200;
    spec.seed = 5;
    PipelineConfig config;
    config.k_nn = 8;
    verify(run_pipeline(generate(spec), config));
}

TEST_CASE("quantile coverage is at least 90% per side and 80% jointly") {
    DatasetSpec spec;
    spec.kind = DatasetKind::torus;
    spec.n_points = 250;
    spec.seed = 3;
    PipelineConfig config;
    config.k_nn = 10;
    const PipelineResult run = run_pipeline(generate(spec), config);
    const auto& r = run.outcome.report;
    CHECK(r.coverage_lower >= 0.9);
    CHECK(r.coverage_upper >= 0.9);
    CHECK(r.coverage_joint >= 0.8);
}

TEST_CASE("toy report carries the five frozen metric values") {
    const auto& r = toy_run().outcome.report;
    CHECK(r.c_sp == doctest::Approx(toy::kCsp).epsilon(1e-4));
    CHECK(r.c_sp_prime == doctest::Approx(toy::kCspFixed).epsilon(1e-3));
    CHECK(r.fixed_error * 100.0 == doctest::Approx(toy::kFixedErrorPct).epsilon(0.05));
    CHECK(r.n_reselected == toy::kNReselected);
    CHECK(r.c_sp_dprime == doctest::Approx(toy::kCspReselected).epsilon(1e-3));
    CHECK(r.reselected_error * 100.0 == doctest::Approx(toy::kReselectedErrorPct).epsilon(0.05));
    CHECK(r.mu_k == doctest::Approx(toy::kMu2).epsilon(1e-4));
    CHECK(r.q10_psi == doctest::Approx(toy::kQ10Psi).epsilon(1e-4));
    CHECK(r.q90_inv_phi_star == doctest::Approx(toy::kQ90InvPhiStar).epsilon(1e-4));
    CHECK(r.phi_g == doctest::Approx(toy::kPhiG).epsilon(1e-4));
    CHECK(r.n_hold == 5);
    CHECK(r.warnings.empty());
}

TEST_CASE("rendered reports are deterministic and follow the schema") {
    const std::string a = render_report(toy_run().outcome.report);
    const std::string b = render_report(run_pipeline(toy::cloud(), toy::config()).outcome.report);
    CHECK(a == b);

    // schema: section lines in fixed order, key-value lines indented
    const std::vector<std::string> sections{
        "cdp_report_version: 1", "parameters:", "input:",   "graph:",
        "pairs:",                "spectrum:",   "certificates:", "detour_errors:",
        "markov:",               "warnings:"};
    std::size_t cursor = 0;
    std::istringstream stream(a);
    std::string line;
    std::size_t matched = 0;
    while (std::getline(stream, line)) {
        if (matched < sections.size() && line == sections[matched]) {
            ++matched;
            continue;
        }
        // every other line is an indented key: value entry
        CHECK(line.rfind("  ", 0) == 0);
        CHECK(line.find(": ") != std::string::npos);
        ++cursor;
    }
    CHECK(matched == sections.size());
    CHECK(cursor > 20);

    // percentages render half-up with two decimals
    CHECK(a.find("fixed_error_pct: 22.63") != std::string::npos);
    CHECK(a.find("reselected_error_pct: 16.01") != std::string::npos);
}
