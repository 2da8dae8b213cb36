// Command-line front door: generate synthetic clouds, run the projection
// pipeline, and recheck certificate quantiles on existing artifacts.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cdp/common.hpp"
#include "cdp/datasets.hpp"
#include "cdp/metrics.hpp"
#include "cdp/pipeline.hpp"
#include "cdp/svg.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitEmptyAdmissible = 3;

struct GenerateArgs {
    std::string kind = "swiss_roll";
    cdp::DatasetSpec spec;
};

void add_dataset_flags(CLI::App* cmd, GenerateArgs& args) {
    cmd->add_option("--kind", args.kind,
                    "dataset kind: swiss_roll, torus, s_curve, helix, mobius, klein, "
                    "annulus_obstacle, toy5")
        ->check(CLI::IsMember({"swiss_roll", "torus", "s_curve", "helix", "mobius", "klein",
                               "annulus_obstacle", "toy5"}));
    cmd->add_option("--n", args.spec.n_points, "number of points")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args.spec.seed, "PRNG seed");
    cmd->add_option("--swiss-t-min", args.spec.swiss_t_min, "swiss roll: spiral start angle");
    cmd->add_option("--swiss-t-max", args.spec.swiss_t_max, "swiss roll: spiral end angle");
    cmd->add_option("--swiss-height", args.spec.swiss_height, "swiss roll: extrusion height");
    cmd->add_option("--torus-major", args.spec.torus_major, "torus: major radius");
    cmd->add_option("--torus-minor", args.spec.torus_minor, "torus: minor radius");
    cmd->add_option("--s-curve-height", args.spec.s_curve_height, "s-curve: extrusion height");
    cmd->add_option("--helix-radius", args.spec.helix_radius, "helix: radius");
    cmd->add_option("--helix-turns", args.spec.helix_turns, "helix: number of turns");
    cmd->add_option("--helix-pitch", args.spec.helix_pitch, "helix: height per radian");
    cmd->add_option("--mobius-radius", args.spec.mobius_radius, "mobius: center-line radius");
    cmd->add_option("--mobius-half-width", args.spec.mobius_half_width, "mobius: strip half-width");
    cmd->add_option("--klein-radius", args.spec.klein_radius, "klein: figure-8 immersion radius");
    cmd->add_option("--annulus-r-inner", args.spec.annulus_r_inner, "annulus: inner radius");
    cmd->add_option("--annulus-r-outer", args.spec.annulus_r_outer, "annulus: outer radius");
    cmd->add_option("--annulus-obstacle-x", args.spec.annulus_obstacle_x, "annulus: obstacle x");
    cmd->add_option("--annulus-obstacle-y", args.spec.annulus_obstacle_y, "annulus: obstacle y");
    cmd->add_option("--annulus-obstacle-radius", args.spec.annulus_obstacle_radius,
                    "annulus: obstacle radius");
    cmd->add_option("--annulus-thickness", args.spec.annulus_thickness, "annulus: slab thickness");
}

std::string fmt4(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

std::string fmt_pct(double fraction) {
    const long long v = std::llround(fraction * 10000.0);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%lld.%02lld", v / 100, v % 100);
    return buf;
}

int cmd_generate(const GenerateArgs& args, const std::string& out_path) {
    cdp::DatasetSpec spec = args.spec;
    spec.kind = cdp::parse_kind(args.kind);
    const cdp::PointCloud cloud = cdp::generate(spec);
    cdp::save_csv(cloud, out_path);
    std::cout << "wrote " << cloud.size() << " points (" << cdp::kind_name(spec.kind) << ") to "
              << out_path << "\n";
    return 0;
}

int cmd_run(const GenerateArgs& args, const std::string& input, const std::string& out_dir,
            cdp::PipelineConfig config, bool emit_edges) {
    cdp::PointCloud cloud;
    if (!input.empty()) {
        cloud = cdp::load_csv(input);
    } else {
        cdp::DatasetSpec spec = args.spec;
        spec.kind = cdp::parse_kind(args.kind);
        cloud = cdp::generate(spec);
    }

    // RunConfig invariants that need the data: 1 <= k < d, 1 <= k_nn < N.
    if (config.k < 1 || config.k >= cloud.dim()) {
        std::cerr << "error: --k must satisfy 1 <= k < d (d=" << cloud.dim() << ")\n";
        return kExitUsage;
    }
    if (config.k_nn < 1 || config.k_nn >= cloud.size()) {
        std::cerr << "error: --knn must satisfy 1 <= knn < N (N=" << cloud.size() << ")\n";
        return kExitUsage;
    }

    const cdp::PipelineResult result = cdp::run_pipeline(cloud, config);

    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    cdp::save_csv(cloud, (dir / "points.csv").string());
    cdp::save_csv(result.outcome.projected, (dir / "projected.csv").string());
    cdp::save_certificates_csv(result.outcome.certificates, result.state.working,
                               (dir / "certificates.csv").string(), &result.state.comp);
    {
        std::ofstream report((dir / "report.txt").string(), std::ios::binary);
        if (!report) throw std::runtime_error("cannot write report.txt");
        report << cdp::render_report(result.outcome.report);
    }
    cdp::save_scatter_svg(result.outcome.projected, (dir / "scatter.svg").string());
    if (emit_edges) {
        cdp::save_edges_csv(result.state.graph, (dir / "edges.csv").string(), &result.state.comp);
    }

    const cdp::MetricsReport& r = result.outcome.report;
    std::cout << "method=" << r.method << " N=" << r.n_points << " d=" << r.dim
              << " edges=" << r.n_edges << " |D*|=" << r.n_admissible << "\n";
    std::cout << "c_sp=" << fmt4(r.c_sp) << " c_sp_fixed=" << fmt4(r.c_sp_prime)
              << " fixed_error=" << fmt_pct(r.fixed_error) << "%"
              << " reselected_error="
              << (r.reselected_defined ? fmt_pct(r.reselected_error) + "%" : std::string("undefined"))
              << "\n";
    std::cout << "mu_k=" << fmt4(r.mu_k) << " phi_g=" << fmt4(r.phi_g)
              << " certificates_hold=" << r.n_hold << "/" << r.n_admissible << "\n";
    std::cout << "timings:";
    for (const auto& [name, sec] : r.timings_sec) {
        std::cout << " " << name << "=" << fmt4(sec) << "s";
    }
    std::cout << "\nartifacts in " << out_dir << "\n";
    return 0;
}

int cmd_certify(const std::string& dir) {
    const std::string path = (std::filesystem::path(dir) / "certificates.csv").string();
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << " (run `cdp run --out " << dir
                  << "` first)\n";
        return kExitUsage;
    }
    std::string line;
    std::getline(in, line);   // header
    std::vector<double> psis, inv_phis, ratios;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() < 8) {
            std::cerr << "error: malformed certificate row: " << line << "\n";
            return kExitUsage;
        }
        psis.push_back(std::stod(cells[2]));
        inv_phis.push_back(std::stod(cells[4]));
        ratios.push_back(std::stod(cells[7]));
    }
    if (psis.empty()) {
        std::cerr << "error: no certificate records in " << path << "\n";
        return kExitUsage;
    }
    const double q10 = cdp::nearest_rank_quantile(psis, 1, 10);
    const double q90 = cdp::nearest_rank_quantile(inv_phis, 9, 10);
    std::size_t lo = 0, hi = 0, joint = 0;
    for (const double ratio : ratios) {
        const bool l = ratio >= q10 - 1e-12;
        const bool h = ratio <= q90 + 1e-12;
        lo += l;
        hi += h;
        joint += l && h;
    }
    const double n = static_cast<double>(ratios.size());
    std::cout << "pairs: " << ratios.size() << "\n";
    std::cout << "q10(psi)=" << fmt4(q10) << " ≤ r̃/r ≤ q90(1/phi*)=" << fmt4(q90)
              << " for ≥90% of pairs per side\n";
    std::cout << "coverage: lower=" << fmt_pct(lo / n) << "% upper=" << fmt_pct(hi / n)
              << "% joint=" << fmt_pct(joint / n) << "%\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convexity-driven projection: detour-preserving linear dimensionality reduction"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    std::string gen_out = "points.csv";
    CLI::App* gen = app.add_subcommand("generate", "generate a synthetic point cloud as CSV");
    add_dataset_flags(gen, gen_args);
    gen->add_option("--out", gen_out, "output CSV path");

    GenerateArgs run_args;
    std::string run_input;
    std::string run_out = "cdp_out";
    std::string method = "cdp";
    bool emit_edges = false;
    cdp::PipelineConfig config;
    CLI::App* run = app.add_subcommand("run", "run the projection pipeline and write artifacts");
    run->add_option("--input", run_input, "input CSV (overrides --kind)");
    add_dataset_flags(run, run_args);
    run->add_option("--knn", config.k_nn, "mutual k-NN neighbor count")->check(CLI::PositiveNumber);
    run->add_option("--tau", config.tau, "admissibility threshold, in (0,1)")
        ->check(CLI::Range(0.0, 1.0).description("FLOAT in (0,1)"))
        ->check([](const std::string& s) {
            const double v = std::stod(s);
            return (v > 0.0 && v < 1.0) ? std::string() : std::string("tau must lie strictly in (0,1)");
        });
    run->add_option("--k", config.k, "target dimension")->check(CLI::PositiveNumber);
    run->add_flag("--standardize,!--no-standardize", config.standardize,
                  "standardize coordinates first (default on)");
    run->add_option("--method", method, "projection method")->check(CLI::IsMember({"cdp", "pca"}));
    run->add_flag("--emit-edges", emit_edges, "also write the graph edge list (edges.csv)");
    run->add_option("--out", run_out, "output directory");

    std::string certify_dir;
    CLI::App* certify = app.add_subcommand("certify", "recheck certificate quantiles on artifacts");
    certify->add_option("--dir", certify_dir, "artifact directory from a previous run")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(gen_args, gen_out);
        if (run->parsed()) {
            config.method = method == "pca" ? cdp::Method::pca : cdp::Method::cdp;
            return cmd_run(run_args, run_input, run_out, config, emit_edges);
        }
        if (certify->parsed()) return cmd_certify(certify_dir);
    } catch (const cdp::EmptyAdmissibleSetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEmptyAdmissible;
    } catch (const cdp::DegenerateInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
