// End-to-end checks of the CLI surface: subcommands, exit codes, file
// formats. Takes the binary path as argv[1] and shells out.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bswitch/poly.hpp"

namespace {

int g_failures = 0;
std::string g_cli;
std::filesystem::path g_dir;

void expect(bool ok, const std::string& what) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << std::endl;
    if (!ok) ++g_failures;
}

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const auto capture = g_dir / "capture.txt";
    const std::string cmd = g_cli + " " + args + " > " + capture.string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = rc < 0 ? rc : WEXITSTATUS(rc);
    std::ifstream in(capture);
    std::ostringstream ss;
    ss << in.rdbuf();
    result.output = ss.str();
    return result;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

size_t count_lines(const std::string& text) {
    size_t n = 0;
    for (char c : text) {
        if (c == '\n') ++n;
    }
    return n;
}

void test_preset_list() {
    const auto r = run("preset-list");
    expect(r.exit_code == 0, "preset-list exits 0");
    expect(r.output.find("example1") != std::string::npos &&
               r.output.find("example2") != std::string::npos &&
               r.output.find("basic") != std::string::npos,
           "preset-list names all presets");
    // Exact matrix entries.
    expect(r.output.find("[-1 1] [-1 -3]") != std::string::npos, "example1 A1 entries");
    expect(r.output.find("[0.01 3] [-1 -4]") != std::string::npos, "example1 A2 entries");
    expect(r.output.find("[-1 10] [-100 -1]") != std::string::npos, "example2 A1 entries");
    expect(r.output.find("[-1 100] [-10 -1]") != std::string::npos, "example2 A2 entries");
    expect(r.output.find("[-1 2] [-3 -4]") != std::string::npos, "basic A entries");
}

void test_interpolate() {
    const auto csv_path = g_dir / "sign.csv";
    const auto r =
        run("interpolate --kind sign --m 100 --delta 10 --samples 101 --out " +
            csv_path.string());
    expect(r.exit_code == 0, "interpolate exits 0");
    const std::string csv = slurp(csv_path);
    expect(csv.rfind("x,sigma\n", 0) == 0, "interpolate CSV header is x,sigma");
    expect(count_lines(csv) == 102, "interpolate row count = samples + header");

    // Values stay inside [0, 1] and the midpoint hits 0.5.
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    bool in_range = true;
    double mid_value = -1.0;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        const double x = std::stod(line.substr(0, comma));
        const double sigma = std::stod(line.substr(comma + 1));
        if (sigma < 0.0 || sigma > 1.0) in_range = false;
        if (x == 0.0) mid_value = sigma;
    }
    expect(in_range, "interpolate values lie in [0, 1]");
    expect(std::abs(mid_value - 0.5) < 1e-9, "sign interpolant crosses 0.5 at x = 0");

    const auto pulse_path = g_dir / "pulse.csv";
    const auto rp = run("interpolate --kind pulse --m 100 --t0 0.2 --t1 0.4 --out " +
                        pulse_path.string());
    expect(rp.exit_code == 0, "pulse interpolate exits 0");
    expect(slurp(pulse_path).rfind("x,sigma\n", 0) == 0, "pulse CSV header");

    expect(run("interpolate --kind wedge").exit_code == 2, "unknown kind is a usage error");
}

void test_simulate() {
    const auto csv_path = g_dir / "sim.csv";
    const auto r = run("simulate --preset example1 --mode blended --x0 1,1 --dt 0.01 "
                       "--t-end 1 --out " + csv_path.string());
    expect(r.exit_code == 0, "simulate exits 0");
    const std::string csv = slurp(csv_path);
    expect(csv.rfind("t,x1,x2,sigma1,sigma2,mode\n", 0) == 0, "simulate CSV header");
    expect(csv.find(",blended\n") != std::string::npos, "simulate rows carry the mode");
    expect(count_lines(csv) == 102, "simulate rows = steps + initial + header");

    // Config files replace presets.
    const auto conf = g_dir / "sys.conf";
    {
        std::ofstream out(conf);
        out << "subsystem\n-1 1\n-1 -3\n\nsubsystem\n0.01 3\n-1 -4\n\n"
               "rule state_sign\ndelta 10\nm 50\n";
    }
    const auto rc = run("simulate --config " + conf.string() +
                        " --mode blended --x0 1,1 --dt 0.01 --t-end 1 --out " +
                        (g_dir / "cfg.csv").string());
    expect(rc.exit_code == 0, "simulate --config exits 0");
    expect(run("simulate --config " + conf.string() + " --preset example1").exit_code == 2,
           "--config with --preset is a usage error");
    expect(run("simulate --config " + (g_dir / "missing.conf").string()).exit_code == 2,
           "missing config file is a usage error");

    expect(run("simulate --preset nope").exit_code == 2, "unknown preset is a usage error");
    expect(run("simulate --x0 1,1").exit_code == 2, "missing system is a usage error");
    expect(run("simulate --preset example1 --x0 bogus").exit_code == 2,
           "malformed x0 is a usage error");
    expect(run("simulate --preset example1 --dt -0.5").exit_code == 2,
           "negative dt is a usage error");
}

void test_compare() {
    const auto csv_path = g_dir / "cmp.csv";
    const auto r = run("compare --preset example1 --x0 1,1 --dt 0.01 --t-end 1 --out " +
                       csv_path.string());
    expect(r.exit_code == 0, "compare exits 0");
    expect(r.output.find("sup_norm_gap=") != std::string::npos, "compare reports the gap");
    expect(r.output.find("standard_diverged=false") != std::string::npos &&
               r.output.find("blended_diverged=false") != std::string::npos,
           "compare reports stability flags for example1");
    const std::string csv = slurp(csv_path);
    expect(csv.find(",standard\n") != std::string::npos &&
               csv.find(",blended\n") != std::string::npos,
           "compare CSV holds both modes");

    // example2 diverges under both representations (coarse step keeps the
    // runtime small; divergence is fast).
    const auto r2 = run("compare --preset example2 --x0 1,1 --dt 0.001 --t-end 10 --out " +
                        (g_dir / "cmp2.csv").string());
    expect(r2.exit_code == 0, "compare example2 exits 0");
    expect(r2.output.find("standard_diverged=true") != std::string::npos &&
               r2.output.find("blended_diverged=true") != std::string::npos,
           "compare reports divergence for example2");
}

void test_lyapunov_and_verify() {
    const auto poly_path = g_dir / "vdot.txt";
    const auto r = run("lyapunov --preset basic --out " + poly_path.string());
    expect(r.exit_code == 0, "lyapunov exits 0");
    const std::string printed = r.output;
    expect(printed.find("-2*x1^2 - 2*x1*x2 - 8*x2^2") != std::string::npos,
           "lyapunov prints the canonical Lie derivative");
    const bswitch::MultiPoly parsed = bswitch::MultiPoly::parse(slurp(poly_path));
    expect(parsed == bswitch::MultiPoly::parse("-2*x1^2 - 2*x1*x2 - 8*x2^2"),
           "lyapunov --out file parses back to the same polynomial");

    // Candidate with a constant term is rejected.
    expect(run("lyapunov --preset basic --candidate \"x1^2 + 1\"").exit_code == 2,
           "candidate with V(0) != 0 is a usage error");

    const auto cert_path = g_dir / "cert.txt";
    const auto rv = run("verify --poly-file " + poly_path.string() +
                        " --bound x1:0:1 --bound x2:0:1 --eps 0.01 --out " +
                        cert_path.string());
    expect(rv.exit_code == 0, "verify exits 0 on Verified");
    expect(rv.output.find("status=Verified") != std::string::npos, "verify prints the status");
    const std::string cert = slurp(cert_path);
    expect(cert.find("status=Verified") != std::string::npos &&
               cert.find("epsilon=0.01") != std::string::npos &&
               cert.find("box_x1=0,1") != std::string::npos,
           "certificate file carries status, epsilon and box");

    const auto rf = run("verify --poly x1 --bound x1:0:1 --eps 0.5");
    expect(rf.exit_code == 1, "verify exits 1 on Falsified");
    expect(rf.output.find("status=Falsified") != std::string::npos &&
               rf.output.find("witness=") != std::string::npos,
           "falsified run prints a witness");

    // An inconclusive run also exits 1: the corner-touching case.
    const auto ri = run("verify --poly x1*x2 --bound x1:-1:1 --bound x2:-1:1 --eps 1 "
                        "--max-depth 8");
    expect(ri.exit_code == 1, "verify exits 1 on Inconclusive");
    expect(ri.output.find("status=Inconclusive") != std::string::npos, "inconclusive status");

    expect(run("verify --poly x1 --eps 0.5").exit_code == 2,
           "missing bounds are a usage error");
    expect(run("verify --poly \"x1 +\" --bound x1:0:1").exit_code == 2,
           "malformed polynomial is a usage error");
    expect(run("verify --poly x1 --bound x1:2:1").exit_code == 2,
           "inverted bound is a usage error");
    expect(run("verify --poly x1 --bound x1:0:1 --bound x9:0:1").exit_code == 2,
           "bound for an unknown variable is a usage error");
    expect(run("verify --poly x1 --bound x1:0:1 --poly-file nope.txt").exit_code == 2,
           "--poly and --poly-file together are a usage error");
}

void test_usage() {
    expect(run("").exit_code == 2, "no subcommand is a usage error");
    expect(run("frobnicate").exit_code == 2, "unknown subcommand is a usage error");
    expect(run("--help").exit_code == 0, "--help exits 0");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-cli-binary>" << std::endl;
        return 64;
    }
    g_cli = argv[1];
    g_dir = std::filesystem::temp_directory_path() /
            ("bswitch_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(g_dir);

    test_preset_list();
    test_interpolate();
    test_simulate();
    test_compare();
    test_lyapunov_and_verify();
    test_usage();

    std::filesystem::remove_all(g_dir);
    std::cout << (g_failures == 0 ? "all cli checks passed" : "cli checks failed: ")
              << (g_failures ? std::to_string(g_failures) : "") << std::endl;
    return g_failures;
}
