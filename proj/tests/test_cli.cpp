#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cdp/datasets.hpp"
#include "oracles.hpp"
#include "toy_golden.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args, const std::string& redirect = "") {
    const std::string cmd = std::string(CDP_CLI_PATH) + " " + args +
                            (redirect.empty() ? " > /dev/null 2>&1" : " " + redirect);
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("generate writes the toy table and is reproducible") {
    const fs::path dir = fresh_dir("cdp_cli_gen");
    const fs::path toy_csv = dir / "toy.csv";
    CHECK(run_cli("generate --kind toy5 --out " + toy_csv.string()) == 0);
    const cdp::PointCloud cloud = cdp::load_csv(toy_csv.string());
    CHECK(cloud.points == toy::cloud().points);

    const fs::path roll1 = dir / "roll1.csv";
    const fs::path roll2 = dir / "roll2.csv";
    CHECK(run_cli("generate --kind swiss_roll --n 1000 --seed 7 --out " + roll1.string()) == 0);
    CHECK(run_cli("generate --kind swiss_roll --n 1000 --seed 7 --out " + roll2.string()) == 0);
    CHECK(read_file(roll1) == read_file(roll2));

    CHECK(run_cli("generate --kind torus --n 0 --out " + (dir / "x.csv").string()) != 0);
    CHECK(run_cli("generate --kind u_shape --out " + (dir / "x.csv").string()) != 0);
    fs::remove_all(dir);
}

TEST_CASE("run on the toy data writes all artifacts with the reference metrics") {
    const fs::path dir = fresh_dir("cdp_cli_toy");
    CHECK(run_cli("run --kind toy5 --no-standardize --knn 2 --tau 0.75 --k 2 --emit-edges --out " +
                  dir.string()) == 0);
    for (const char* name :
         {"points.csv", "projected.csv", "certificates.csv", "report.txt", "scatter.svg",
          "edges.csv"}) {
        CHECK(fs::exists(dir / name));
    }
    const std::string report = read_file(dir / "report.txt");
    CHECK(report.find("c_sp: 0.5076") != std::string::npos);
    CHECK(report.find("mu_k: 0.9573") != std::string::npos);
    CHECK(report.find("fixed_error_pct: 22.63") != std::string::npos);
    CHECK(report.find("reselected_error_pct: 16.01") != std::string::npos);
    CHECK(report.find("all_hold: true") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("identical configurations produce byte-identical artifacts") {
    const fs::path dir1 = fresh_dir("cdp_cli_det1");
    const fs::path dir2 = fresh_dir("cdp_cli_det2");
    const std::string args = "run --kind s_curve --n 120 --seed 9 --knn 6 --tau 0.8 --k 2 --out ";
    CHECK(run_cli(args + dir1.string()) == 0);
    CHECK(run_cli(args + dir2.string()) == 0);
    CHECK(read_file(dir1 / "report.txt") == read_file(dir2 / "report.txt"));
    CHECK(read_file(dir1 / "certificates.csv") == read_file(dir2 / "certificates.csv"));
    CHECK(read_file(dir1 / "projected.csv") == read_file(dir2 / "projected.csv"));
    CHECK(read_file(dir1 / "scatter.svg") == read_file(dir2 / "scatter.svg"));
    fs::remove_all(dir1);
    fs::remove_all(dir2);
}

TEST_CASE("scatter output is well-formed XML with one glyph per point") {
    const fs::path dir = fresh_dir("cdp_cli_svg");
    CHECK(run_cli("run --kind torus --n 80 --seed 4 --knn 6 --out " + dir.string()) == 0);
    const std::string svg = read_file(dir / "scatter.svg");
    CHECK(oracles::xml_well_formed(svg));
    std::size_t circles = 0, pos = 0;
    while ((pos = svg.find("<circle ", pos)) != std::string::npos) {
        ++circles;
        pos += 8;
    }
    CHECK(circles == 80);
    fs::remove_all(dir);
}

TEST_CASE("usage errors exit nonzero") {
    const fs::path dir = fresh_dir("cdp_cli_usage");
    CHECK(run_cli("run --kind toy5 --tau 1.5 --out " + dir.string()) != 0);
    CHECK(run_cli("run --kind toy5 --tau 0 --out " + dir.string()) != 0);
    CHECK(run_cli("run --kind toy5 --knn 9 --out " + dir.string()) != 0);
    CHECK(run_cli("run --kind toy5 --k 3 --out " + dir.string()) != 0);   // k must stay below d
    CHECK(run_cli("run --input /nonexistent.csv --out " + dir.string()) != 0);
    fs::remove_all(dir);
}

TEST_CASE("degenerate inputs and empty admissible sets use dedicated exit codes") {
    const fs::path dir = fresh_dir("cdp_cli_codes");
    const fs::path dup = dir / "dup.csv";
    {
        std::ofstream out(dup);
        out << "0,0,0\n1,1,0\n0,0,0\n2,0,1\n";
    }
    CHECK(run_cli("run --input " + dup.string() + " --knn 1 --no-standardize --out " +
                  (dir / "o1").string()) == 2);

    // toy with a tau below the smallest ratio: admissible set is empty
    CHECK(run_cli("run --kind toy5 --no-standardize --knn 2 --tau 0.1 --k 2 --out " +
                  (dir / "o2").string()) == 3);

    // planar input: standardization hits a zero-variance coordinate
    const fs::path flat = dir / "flat.csv";
    {
        std::ofstream out(flat);
        out << "0,0,0\n1,0.2,0\n2,0,0\n2,1,0\n1,0.5,0\n";
    }
    CHECK(run_cli("run --input " + flat.string() + " --knn 2 --k 1 --out " +
                  (dir / "o3").string()) == 2);
    fs::remove_all(dir);
}

TEST_CASE("certify recomputes the quantile sandwich from artifacts") {
    const fs::path dir = fresh_dir("cdp_cli_certify");
    CHECK(run_cli("run --kind toy5 --no-standardize --knn 2 --tau 0.75 --k 2 --out " +
                  dir.string()) == 0);
    const fs::path out1 = dir / "certify1.txt";
    const fs::path out2 = dir / "certify2.txt";
    CHECK(run_cli("certify --dir " + dir.string(), "> " + out1.string() + " 2>&1") == 0);
    CHECK(run_cli("certify --dir " + dir.string(), "> " + out2.string() + " 2>&1") == 0);
    const std::string text = read_file(out1);
    CHECK(text.find("q10(psi)=0.9435 ≤ r̃/r ≤ q90(1/phi*)=1.5461 "
                    "for ≥90% of pairs per side") != std::string::npos);
    CHECK(text == read_file(out2));

    CHECK(run_cli("certify --dir /nonexistent_dir_xyz") != 0);
    fs::remove_all(dir);
}

TEST_CASE("pca method is selectable from the command line") {
    const fs::path dir = fresh_dir("cdp_cli_pca");
    CHECK(run_cli("run --kind toy5 --no-standardize --knn 2 --tau 0.75 --k 2 --method pca "
                  "--out " + dir.string()) == 0);
    const std::string report = read_file(dir / "report.txt");
    CHECK(report.find("method: pca") != std::string::npos);
    CHECK(report.find("all_hold: true") != std::string::npos);
    fs::remove_all(dir);
}
