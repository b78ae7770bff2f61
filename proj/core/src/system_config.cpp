#include "bswitch/system_config.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bswitch {

namespace {

[[noreturn]] void fail(size_t line_no, const std::string& what) {
    throw std::invalid_argument("system config, line " + std::to_string(line_no) + ": " + what);
}

std::string strip(const std::string& line) {
    std::string s = line;
    if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool parse_real(const std::string& token, double& out) {
    const char* start = token.c_str();
    char* end = nullptr;
    out = std::strtod(start, &end);
    return end == start + token.size() && !token.empty();
}

std::vector<std::string> split(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> tokens;
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

SwitchedSystem parse_system_config(std::istream& in) {
    std::vector<Mat> matrices;
    std::vector<std::vector<double>> rows;           // rows of the matrix being read
    bool in_matrix = false;
    size_t matrix_line = 0;

    std::string rule_kind = "state_sign";
    double delta = 10.0;
    unsigned degree = 100;
    bool composed = false;
    std::vector<std::pair<size_t, std::vector<std::pair<double, double>>>> window_specs;

    auto finish_matrix = [&]() {
        if (!in_matrix) return;
        if (rows.empty()) fail(matrix_line, "subsystem has no matrix rows");
        const size_t n = rows.front().size();
        for (const auto& row : rows) {
            if (row.size() != n) fail(matrix_line, "ragged matrix rows");
        }
        if (rows.size() != n) fail(matrix_line, "subsystem matrix must be square");
        Mat A(n, n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) A(i, j) = rows[i][j];
        }
        matrices.push_back(std::move(A));
        rows.clear();
        in_matrix = false;
    };

    std::string raw;
    size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip(raw);
        if (line.empty()) {
            finish_matrix();
            continue;
        }
        const auto tokens = split(line);
        const std::string& key = tokens.front();

        // Numeric rows extend the matrix currently being read.
        double probe;
        if (in_matrix && parse_real(key, probe)) {
            std::vector<double> row;
            row.reserve(tokens.size());
            for (const auto& tok : tokens) {
                double v;
                if (!parse_real(tok, v)) fail(line_no, "bad matrix entry '" + tok + "'");
                row.push_back(v);
            }
            rows.push_back(std::move(row));
            continue;
        }
        finish_matrix();

        if (key == "subsystem") {
            if (tokens.size() != 1) fail(line_no, "'subsystem' takes no arguments");
            in_matrix = true;
            matrix_line = line_no;
        } else if (key == "rule") {
            if (tokens.size() != 2) fail(line_no, "'rule' takes one argument");
            rule_kind = tokens[1];
        } else if (key == "delta") {
            if (tokens.size() != 2 || !parse_real(tokens[1], delta)) {
                fail(line_no, "'delta' takes one real argument");
            }
        } else if (key == "m") {
            double v;
            if (tokens.size() != 2 || !parse_real(tokens[1], v) || v < 1 ||
                v != static_cast<unsigned>(v)) {
                fail(line_no, "'m' takes one positive integer argument");
            }
            degree = static_cast<unsigned>(v);
        } else if (key == "composed") {
            if (tokens.size() != 2 || (tokens[1] != "true" && tokens[1] != "false")) {
                fail(line_no, "'composed' takes true or false");
            }
            composed = tokens[1] == "true";
        } else if (key == "windows") {
            if (tokens.size() < 3) fail(line_no, "'windows' takes an index and windows");
            double idx_real;
            if (!parse_real(tokens[1], idx_real) || idx_real < 1 ||
                idx_real != static_cast<size_t>(idx_real)) {
                fail(line_no, "'windows' index must be a 1-based integer");
            }
            std::vector<std::pair<double, double>> list;
            for (size_t i = 2; i < tokens.size(); ++i) {
                const auto colon = tokens[i].find(':');
                double t0, t1;
                if (colon == std::string::npos ||
                    !parse_real(tokens[i].substr(0, colon), t0) ||
                    !parse_real(tokens[i].substr(colon + 1), t1)) {
                    fail(line_no, "bad window '" + tokens[i] + "' (expected t0:t1)");
                }
                list.emplace_back(t0, t1);
            }
            window_specs.emplace_back(static_cast<size_t>(idx_real) - 1, std::move(list));
        } else {
            fail(line_no, "unknown keyword '" + key + "'");
        }
    }
    finish_matrix();

    if (matrices.size() < 2) {
        throw std::invalid_argument("system config: needs at least 2 'subsystem' blocks");
    }

    SwitchingRule rule;
    if (rule_kind == "state_sign") {
        rule = StateSignRule{delta, degree, composed};
    } else if (rule_kind == "crisp_state_sign") {
        rule = CrispStateSignRule{delta};
    } else if (rule_kind == "time_pulse" || rule_kind == "crisp_time_pulse") {
        PulseWindows windows(matrices.size());
        for (auto& [idx, list] : window_specs) {
            if (idx >= windows.size()) {
                throw std::invalid_argument("system config: windows index " +
                                            std::to_string(idx + 1) + " exceeds subsystem count");
            }
            auto& target = windows[idx];
            target.insert(target.end(), list.begin(), list.end());
        }
        if (rule_kind == "time_pulse") {
            rule = TimePulseRule{std::move(windows), degree};
        } else {
            rule = CrispTimePulseRule{std::move(windows)};
        }
    } else {
        throw std::invalid_argument("system config: unknown rule '" + rule_kind + "'");
    }

    std::vector<LinearSubsystem> subs;
    subs.reserve(matrices.size());
    for (auto& A : matrices) subs.push_back(LinearSubsystem{std::move(A)});
    return SwitchedSystem(std::move(subs), std::move(rule));
}

SwitchedSystem parse_system_config_text(const std::string& text) {
    std::istringstream iss(text);
    return parse_system_config(iss);
}

SwitchedSystem load_system_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open system config '" + path + "'");
    return parse_system_config(in);
}

}  // namespace bswitch
