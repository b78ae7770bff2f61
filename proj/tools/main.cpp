// Batch front end for the Bernstein-blended switched-system pipeline:
// interpolate switching signals, simulate/compare the two representations,
// emit Lyapunov derivatives, and certify polynomial inequalities.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bswitch/bernstein.hpp"
#include "bswitch/lyapunov.hpp"
#include "bswitch/numeric.hpp"
#include "bswitch/poly.hpp"
#include "bswitch/presets.hpp"
#include "bswitch/switched.hpp"
#include "bswitch/system_config.hpp"
#include "bswitch/verifier.hpp"

namespace {

using namespace bswitch;

constexpr int kExitOk = 0;
constexpr int kExitUnverified = 1;
constexpr int kExitUsage = 2;

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    return file;
}

std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> out;
    std::string token;
    std::istringstream iss(text);
    while (std::getline(iss, token, ',')) {
        size_t used = 0;
        double v = std::stod(token, &used);
        if (used != token.size()) {
            throw std::invalid_argument("bad number '" + token + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("expected a comma-separated list of reals");
    return out;
}

struct SystemChoice {
    std::string preset;
    std::string config_path;
    std::optional<double> delta;
    std::optional<unsigned> degree;
    bool composed = false;

    SwitchedSystem build() const {
        if (!preset.empty() && !config_path.empty()) {
            throw std::invalid_argument("--preset and --config are mutually exclusive");
        }
        if (preset.empty() && config_path.empty()) {
            throw std::invalid_argument("one of --preset or --config is required");
        }
        SwitchedSystem sys = config_path.empty() ? make_system(find_preset(preset))
                                                 : load_system_config(config_path);
        if (!delta && !degree && !composed) return sys;
        SwitchingRule rule = sys.rule();
        if (auto* sign = std::get_if<StateSignRule>(&rule)) {
            if (delta) sign->delta = *delta;
            if (degree) sign->degree = *degree;
            sign->composed = sign->composed || composed;
        } else if (auto* crisp = std::get_if<CrispStateSignRule>(&rule)) {
            if (delta) crisp->delta = *delta;
        } else if (auto* pulse = std::get_if<TimePulseRule>(&rule)) {
            if (degree) pulse->degree = *degree;
        }
        std::vector<LinearSubsystem> subs = sys.subsystems();
        return SwitchedSystem(std::move(subs), std::move(rule));
    }

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--preset", preset, "built-in system: example1 | example2 | basic");
        cmd->add_option("--config", config_path, "system config file (see README)");
        auto* d = cmd->add_option("--delta", delta, "sign-rule scaling factor override");
        d->check(CLI::PositiveNumber);
        cmd->add_option("--m", degree, "Bernstein degree override")->check(CLI::PositiveNumber);
        cmd->add_flag("--composed", composed, "compose the step interpolant with itself");
    }
};

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, const std::string& mode,
                          bool header) {
    const size_t n = traj.states.front().size();
    const size_t k = traj.weights.front().size();
    if (header) {
        out << "t";
        for (size_t i = 1; i <= n; ++i) out << ",x" << i;
        for (size_t i = 1; i <= k; ++i) out << ",sigma" << i;
        out << ",mode\n";
    }
    for (size_t row = 0; row < traj.times.size(); ++row) {
        out << repr(traj.times[row]);
        for (double v : traj.states[row]) out << "," << repr(v);
        for (double v : traj.weights[row]) out << "," << repr(v);
        out << "," << mode << "\n";
    }
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

struct InterpolateArgs {
    std::string kind = "sign";
    unsigned degree = 100;
    double delta = 1.0;
    unsigned compose_depth = 0;
    double t0 = 0.2;
    double t1 = 0.4;
    double lo = -1.0;
    double hi = 1.0;
    unsigned samples = 401;
    std::string out_path;
};

int run_interpolate(const InterpolateArgs& args) {
    std::ofstream file;
    std::ostream& out = open_sink(args.out_path, file);
    out << "x,sigma\n";
    if (args.kind == "sign") {
        ComposedSignal chain{{step_series(args.degree, -1.0, 1.0, 0.0)}};
        for (unsigned d = 0; d < args.compose_depth; ++d) {
            chain = compose(step_series(args.degree, 0.0, 1.0, 0.5), std::move(chain));
        }
        for (unsigned i = 0; i < args.samples; ++i) {
            const double x = args.lo + (args.hi - args.lo) * i / (args.samples - 1);
            out << repr(x) << "," << repr(chain(args.delta * x)) << "\n";
        }
    } else if (args.kind == "pulse") {
        const BernsteinSeries pulse = pulse_interpolant(args.degree, args.t0, args.t1);
        for (unsigned i = 0; i < args.samples; ++i) {
            const double x = static_cast<double>(i) / (args.samples - 1);
            out << repr(x) << "," << repr(eval_series(pulse, x)) << "\n";
        }
    } else {
        throw std::invalid_argument("unknown interpolation kind '" + args.kind +
                                    "' (expected sign or pulse)");
    }
    return kExitOk;
}

struct SimulateArgs {
    SystemChoice system;
    std::string mode = "standard";
    std::string x0_text = "1,1";
    double dt = 1e-3;
    double t_end = 10.0;
    std::string out_path;
};

SimMode parse_mode(const std::string& mode) {
    if (mode == "standard") return SimMode::Standard;
    if (mode == "blended") return SimMode::Blended;
    throw std::invalid_argument("unknown mode '" + mode + "' (expected standard or blended)");
}

int run_simulate(const SimulateArgs& args) {
    const SwitchedSystem sys = args.system.build();
    const auto x0 = parse_reals(args.x0_text);
    const Trajectory traj = simulate(sys, x0, args.t_end, args.dt, parse_mode(args.mode));
    std::ofstream file;
    std::ostream& out = open_sink(args.out_path, file);
    write_trajectory_csv(out, traj, args.mode, true);
    std::cerr << "status="
              << (traj.status == SimStatus::Completed ? "completed" : "diverged")
              << " final_time=" << repr(traj.final_time()) << "\n";
    return kExitOk;
}

struct CompareArgs {
    SystemChoice system;
    std::string x0_text = "1,1";
    double dt = 1e-3;
    double t_end = 10.0;
    std::string out_path;
};

int run_compare(const CompareArgs& args) {
    const SwitchedSystem sys = args.system.build();
    const auto x0 = parse_reals(args.x0_text);
    const Trajectory std_traj = simulate(sys, x0, args.t_end, args.dt, SimMode::Standard);
    const Trajectory blend_traj = simulate(sys, x0, args.t_end, args.dt, SimMode::Blended);

    std::ofstream file;
    std::ostream& out = open_sink(args.out_path, file);
    write_trajectory_csv(out, std_traj, "standard", true);
    write_trajectory_csv(out, blend_traj, "blended", false);

    const size_t shared = std::min(std_traj.times.size(), blend_traj.times.size());
    double gap = 0.0;
    for (size_t row = 0; row < shared; ++row) {
        for (size_t i = 0; i < std_traj.states[row].size(); ++i) {
            gap = std::max(gap, std::fabs(std_traj.states[row][i] - blend_traj.states[row][i]));
        }
    }
    std::cout << "sup_norm_gap=" << repr(gap) << "\n";
    std::cout << "standard_diverged="
              << (std_traj.status == SimStatus::DivergenceDetected ? "true" : "false") << "\n";
    std::cout << "blended_diverged="
              << (blend_traj.status == SimStatus::DivergenceDetected ? "true" : "false") << "\n";
    return kExitOk;
}

struct LyapunovArgs {
    SystemChoice system;
    std::string candidate_text = "x1^2 + x2^2";
    std::string out_path;
};

int run_lyapunov(const LyapunovArgs& args) {
    SystemChoice choice = args.system;
    // Verification path defaults to a modest expansion degree.
    if (!choice.degree) choice.degree = 10;
    const SwitchedSystem sys = choice.build();
    const LyapunovCandidate V(MultiPoly::parse(args.candidate_text));
    const PolyVectorField field = vector_field_bswitched(sys);
    const MultiPoly vdot = lie_derivative(V, field);
    std::cout << vdot.to_string() << "\n";
    if (!args.out_path.empty()) {
        std::ofstream file(args.out_path);
        if (!file) {
            throw std::invalid_argument("cannot open output file '" + args.out_path + "'");
        }
        file << vdot.to_string() << "\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string poly_text;
    std::string poly_path;
    std::vector<std::string> bounds;
    double epsilon = 0.01;
    int max_depth = 40;
    std::uint64_t max_boxes = 1'000'000;
    double slack = kDefaultSlack;
    std::string cert_path;
};

Box parse_bounds(const std::vector<std::string>& specs, const MultiPoly& p) {
    std::vector<std::string> names;
    std::vector<Interval> ranges;
    for (const auto& spec : specs) {
        const auto c1 = spec.find(':');
        const auto c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            throw std::invalid_argument("bad bound '" + spec + "' (expected var:lo:hi)");
        }
        const std::string name = spec.substr(0, c1);
        double lo, hi;
        try {
            lo = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
            hi = std::stod(spec.substr(c2 + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad bound '" + spec + "' (expected var:lo:hi)");
        }
        if (!(lo < hi)) {
            throw std::invalid_argument("bad bound '" + spec + "': requires lo < hi");
        }
        names.push_back(name);
        ranges.push_back(make_interval(lo, hi));
    }
    Box box(names, ranges);
    // The CLI is strict both ways: every polynomial variable needs a bound
    // and every bound must name a polynomial variable.
    for (const auto& v : p.vars()) {
        if (!std::binary_search(box.names().begin(), box.names().end(), v)) {
            throw std::invalid_argument("missing --bound for variable '" + v + "'");
        }
    }
    for (const auto& v : box.names()) {
        if (!std::binary_search(p.vars().begin(), p.vars().end(), v)) {
            throw std::invalid_argument("--bound names unknown variable '" + v + "'");
        }
    }
    return box;
}

int run_verify(const VerifyArgs& args) {
    if (args.poly_text.empty() == args.poly_path.empty()) {
        throw std::invalid_argument("exactly one of --poly or --poly-file is required");
    }
    std::string text = args.poly_text;
    if (!args.poly_path.empty()) {
        std::ifstream in(args.poly_path);
        if (!in) throw std::invalid_argument("cannot open '" + args.poly_path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    const MultiPoly p = MultiPoly::parse(text);
    const Box box = parse_bounds(args.bounds, p);
    VerifyConfig cfg;
    cfg.epsilon = args.epsilon;
    cfg.max_depth = args.max_depth;
    cfg.max_boxes = args.max_boxes;
    cfg.slack_factor = args.slack;

    const Certificate cert = verify_ineq(p, box, cfg);

    std::cout << "status=" << to_string(cert.status) << "\n";
    if (cert.status == VerifyStatus::Falsified) {
        std::cout << "witness=";
        for (size_t i = 0; i < cert.witness.size(); ++i) {
            std::cout << (i ? "," : "") << repr(cert.witness[i]);
        }
        std::cout << "\nwitness_value=" << repr(cert.witness_value) << "\n";
    }
    if (cert.status == VerifyStatus::Inconclusive) {
        std::cout << "reason=" << cert.reason << "\n";
    }
    std::cout << "boxes_processed=" << cert.boxes_processed << "\n";
    std::cout << "elapsed_seconds=" << repr(cert.elapsed_seconds)
              << " (non-deterministic; excluded from the certificate file)\n";
    if (!args.cert_path.empty()) {
        std::ofstream file(args.cert_path);
        if (!file) {
            throw std::invalid_argument("cannot open output file '" + args.cert_path + "'");
        }
        write_certificate(file, cert, p, box);
    }
    return cert.status == VerifyStatus::Verified ? kExitOk : kExitUnverified;
}

int run_preset_list() {
    for (const auto& preset : presets()) {
        std::cout << preset.name << ": " << preset.description << "\n";
        for (size_t s = 0; s < preset.matrices.size(); ++s) {
            const Mat& A = preset.matrices[s];
            std::cout << "  A" << s + 1 << " =";
            for (size_t i = 0; i < A.rows(); ++i) {
                std::cout << " [";
                for (size_t j = 0; j < A.cols(); ++j) {
                    std::cout << (j ? " " : "") << repr(A(i, j));
                }
                std::cout << "]";
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernstein-blended switched systems: simulation, Lyapunov derivatives, "
                 "and rigorous inequality certificates"};
    app.require_subcommand(1);

    InterpolateArgs interp;
    auto* interp_cmd =
        app.add_subcommand("interpolate", "emit a switching-signal interpolant as CSV");
    interp_cmd->add_option("--kind", interp.kind, "sign | pulse")->capture_default_str();
    interp_cmd->add_option("--m", interp.degree, "Bernstein degree")->capture_default_str();
    interp_cmd->add_option("--delta", interp.delta, "sign scaling factor")
        ->capture_default_str();
    interp_cmd->add_option("--compose-depth", interp.compose_depth,
                           "extra composition stages for the sign interpolant")
        ->capture_default_str();
    interp_cmd->add_option("--t0", interp.t0, "pulse window start")->capture_default_str();
    interp_cmd->add_option("--t1", interp.t1, "pulse window end")->capture_default_str();
    interp_cmd->add_option("--lo", interp.lo, "sign plot range start")->capture_default_str();
    interp_cmd->add_option("--hi", interp.hi, "sign plot range end")->capture_default_str();
    interp_cmd->add_option("--samples", interp.samples, "number of CSV rows")
        ->check(CLI::Range(2u, 10'000'000u))
        ->capture_default_str();
    interp_cmd->add_option("--out", interp.out_path, "output file (default stdout)");

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "integrate one representation");
    sim.system.add_flags(sim_cmd);
    sim_cmd->add_option("--mode", sim.mode, "standard | blended")->capture_default_str();
    sim_cmd->add_option("--x0", sim.x0_text, "initial state, comma-separated")
        ->capture_default_str();
    sim_cmd->add_option("--dt", sim.dt, "integration step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sim_cmd->add_option("--t-end", sim.t_end, "horizon")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sim_cmd->add_option("--out", sim.out_path, "output CSV file (default stdout)");

    CompareArgs cmp;
    auto* cmp_cmd =
        app.add_subcommand("compare", "integrate both representations and report the gap");
    cmp.system.add_flags(cmp_cmd);
    cmp_cmd->add_option("--x0", cmp.x0_text, "initial state, comma-separated")
        ->capture_default_str();
    cmp_cmd->add_option("--dt", cmp.dt, "integration step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmp_cmd->add_option("--t-end", cmp.t_end, "horizon")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmp_cmd->add_option("--out", cmp.out_path, "merged CSV file (default stdout)");

    LyapunovArgs lyap;
    auto* lyap_cmd = app.add_subcommand(
        "lyapunov", "print the Lie derivative of a candidate along the blended field");
    lyap.system.add_flags(lyap_cmd);
    lyap_cmd->add_option("--candidate", lyap.candidate_text,
                         "Lyapunov candidate polynomial (canonical text form)")
        ->capture_default_str();
    lyap_cmd->add_option("--out", lyap.out_path,
                         "also write the polynomial to a file for `verify --poly-file`");

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand(
        "verify", "certify  forall x in box: f(x) < eps  by interval branch and bound");
    ver_cmd->add_option("--poly", ver.poly_text, "polynomial in canonical text form");
    ver_cmd->add_option("--poly-file", ver.poly_path, "file holding the polynomial");
    ver_cmd->add_option("--bound", ver.bounds, "per-variable bound var:lo:hi (repeatable)");
    ver_cmd->add_option("--eps", ver.epsilon, "right-hand side of the inequality")
        ->capture_default_str();
    ver_cmd->add_option("--max-depth", ver.max_depth, "bisection depth budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ver_cmd->add_option("--max-boxes", ver.max_boxes, "box budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ver_cmd->add_option("--slack", ver.slack, "outward slack factor")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ver_cmd->add_option("--out", ver.cert_path, "certificate file");

    auto* list_cmd = app.add_subcommand("preset-list", "list built-in systems");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (interp_cmd->parsed()) return run_interpolate(interp);
        if (sim_cmd->parsed()) return run_simulate(sim);
        if (cmp_cmd->parsed()) return run_compare(cmp);
        if (lyap_cmd->parsed()) return run_lyapunov(lyap);
        if (ver_cmd->parsed()) return run_verify(ver);
        if (list_cmd->parsed()) return run_preset_list();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
