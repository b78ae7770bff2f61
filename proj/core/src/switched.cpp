#include "bswitch/switched.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "bswitch/numeric.hpp"

namespace bswitch {

bool rule_is_blended(const SwitchingRule& rule) {
    return std::holds_alternative<StateSignRule>(rule) ||
           std::holds_alternative<TimePulseRule>(rule);
}

bool rule_is_time_dependent(const SwitchingRule& rule) {
    return std::holds_alternative<TimePulseRule>(rule) ||
           std::holds_alternative<CrispTimePulseRule>(rule);
}

namespace {

const PulseWindows* rule_windows(const SwitchingRule& rule) {
    if (const auto* p = std::get_if<TimePulseRule>(&rule)) return &p->windows;
    if (const auto* p = std::get_if<CrispTimePulseRule>(&rule)) return &p->windows;
    return nullptr;
}

bool rule_is_sign(const SwitchingRule& rule) {
    return std::holds_alternative<StateSignRule>(rule) ||
           std::holds_alternative<CrispStateSignRule>(rule);
}

double rule_delta(const SwitchingRule& rule) {
    if (const auto* p = std::get_if<StateSignRule>(&rule)) return p->delta;
    return std::get<CrispStateSignRule>(rule).delta;
}

void validate_windows(const PulseWindows& windows, size_t subsystem_count) {
    if (windows.size() != subsystem_count) {
        throw std::invalid_argument("SwitchedSystem: pulse rule needs one window list per "
                                    "subsystem (got " + std::to_string(windows.size()) +
                                    " lists for " + std::to_string(subsystem_count) +
                                    " subsystems)");
    }
    std::vector<std::pair<double, double>> all;
    for (const auto& list : windows) {
        for (const auto& [t0, t1] : list) {
            if (!(t0 >= 0.0 && t0 < t1 && t1 <= 1.0)) {
                throw std::invalid_argument("SwitchedSystem: pulse window [" + repr(t0) +
                                            ", " + repr(t1) + "] must satisfy 0 <= t0 < t1 <= 1");
            }
            all.emplace_back(t0, t1);
        }
    }
    if (all.empty()) {
        throw std::invalid_argument("SwitchedSystem: pulse rule has no windows");
    }
    std::sort(all.begin(), all.end());
    for (size_t i = 1; i < all.size(); ++i) {
        if (all[i].first < all[i - 1].second) {
            throw std::invalid_argument("SwitchedSystem: pulse windows overlap");
        }
    }
}

}  // namespace

SwitchedSystem::SwitchedSystem(std::vector<LinearSubsystem> subsystems, SwitchingRule rule)
    : subsystems_(std::move(subsystems)), rule_(std::move(rule)) {
    if (subsystems_.size() < 2) {
        throw std::invalid_argument("SwitchedSystem: needs at least 2 subsystems");
    }
    for (const auto& sub : subsystems_) {
        if (!sub.A.square()) throw std::invalid_argument("SwitchedSystem: non-square matrix");
        if (!sub.A.all_finite()) {
            throw std::invalid_argument("SwitchedSystem: non-finite matrix entry");
        }
    }
    dimension_ = subsystems_.front().A.rows();
    for (const auto& sub : subsystems_) {
        if (sub.A.rows() != dimension_) {
            throw std::invalid_argument("SwitchedSystem: subsystem dimensions differ");
        }
    }
    if (rule_is_sign(rule_)) {
        if (subsystems_.size() != 2) {
            throw std::invalid_argument("SwitchedSystem: sign rules need exactly 2 subsystems");
        }
        if (dimension_ < 2) {
            throw std::invalid_argument("SwitchedSystem: sign rules need dimension >= 2");
        }
        if (!(rule_delta(rule_) > 0.0)) {
            throw std::invalid_argument("SwitchedSystem: delta must be > 0");
        }
    }
    if (const auto* windows = rule_windows(rule_)) {
        validate_windows(*windows, subsystems_.size());
    }
}

size_t active_subsystem(const SwitchedSystem& sys, double t, std::span<const double> x) {
    const auto& rule = sys.rule();
    if (rule_is_sign(rule)) {
        // Tie at exactly zero resolves to subsystem 0 for determinism.
        return rule_delta(rule) * x[0] * x[1] >= 0.0 ? 0 : 1;
    }
    const PulseWindows& windows = *rule_windows(rule);
    for (size_t i = 0; i < windows.size(); ++i) {
        for (const auto& [t0, t1] : windows[i]) {
            if (t >= t0 && t <= t1) return i;
        }
    }
    throw std::runtime_error("rhs_standard: no active subsystem at t=" + repr(t));
}

std::vector<double> rhs_standard(const SwitchedSystem& sys, double t,
                                 std::span<const double> x) {
    if (x.size() != sys.dimension()) {
        throw std::invalid_argument("rhs_standard: state dimension mismatch");
    }
    return sys.subsystems()[active_subsystem(sys, t, x)].A.apply(x);
}

WeightEvaluator::WeightEvaluator(const SwitchingRule& rule, size_t subsystem_count)
    : data_(SignData{SignWeight(1.0, ComposedSignal{})}), count_(subsystem_count) {
    if (const auto* sign = std::get_if<StateSignRule>(&rule)) {
        if (subsystem_count != 2) {
            throw std::invalid_argument("blend_weights: sign rules need exactly 2 subsystems");
        }
        data_ = SignData{sign_interpolant(sign->degree, sign->delta, sign->composed ? 1 : 0)};
    } else if (const auto* pulse = std::get_if<TimePulseRule>(&rule)) {
        PulseData pd;
        pd.unions.reserve(pulse->windows.size());
        for (const auto& list : pulse->windows) {
            pd.unions.push_back(pulse_union(pulse->degree, list));
        }
        if (pd.unions.size() != subsystem_count) {
            throw std::invalid_argument("blend_weights: window list count mismatch");
        }
        data_ = std::move(pd);
    } else {
        throw std::invalid_argument("blend_weights: rule is crisp, not blended");
    }
}

std::vector<double> WeightEvaluator::operator()(double t, std::span<const double> x) const {
    std::vector<double> weights(count_, 0.0);
    if (const auto* sign = std::get_if<SignData>(&data_)) {
        const double w = sign->weight(x[0], x[1]);
        weights[0] = w;
        weights[1] = 1.0 - w;
        return weights;
    }
    const auto& unions = std::get<PulseData>(data_).unions;
    double total = 0.0;
    for (size_t i = 0; i < unions.size(); ++i) {
        weights[i] = eval_series(unions[i], t);
        total += weights[i];
    }
    if (total == 0.0) {
        // Degenerate all-zero pulse stack; fall back to a uniform blend.
        std::fill(weights.begin(), weights.end(), 1.0 / static_cast<double>(count_));
    } else {
        for (double& w : weights) w /= total;
    }
    // Close the convex combination exactly: the last weight is 1 - rest.
    double rest = 0.0;
    for (size_t i = 0; i + 1 < weights.size(); ++i) rest += weights[i];
    weights.back() = std::max(0.0, 1.0 - rest);
    return weights;
}

std::vector<double> blend_weights(const SwitchingRule& rule, size_t subsystem_count,
                                  double t, std::span<const double> x) {
    return WeightEvaluator(rule, subsystem_count)(t, x);
}

std::vector<double> rhs_bswitched(const SwitchedSystem& sys, double t,
                                  std::span<const double> x) {
    if (x.size() != sys.dimension()) {
        throw std::invalid_argument("rhs_bswitched: state dimension mismatch");
    }
    const auto weights = blend_weights(sys.rule(), sys.subsystem_count(), t, x);
    std::vector<double> out(sys.dimension(), 0.0);
    for (size_t i = 0; i < weights.size(); ++i) {
        const auto v = sys.subsystems()[i].A.apply(x);
        for (size_t j = 0; j < out.size(); ++j) out[j] += weights[i] * v[j];
    }
    return out;
}

namespace {

double inf_norm(std::span<const double> x) {
    double n = 0.0;
    for (double v : x) n = std::max(n, std::fabs(v));
    return n;
}

bool all_finite(std::span<const double> x) {
    return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

std::vector<double> one_hot(size_t n, size_t idx) {
    std::vector<double> w(n, 0.0);
    w[idx] = 1.0;
    return w;
}

}  // namespace

Trajectory simulate(const SwitchedSystem& sys, std::span<const double> x0, double t_end,
                    double dt, SimMode mode) {
    if (!(dt > 0.0)) throw std::invalid_argument("simulate: dt must be > 0");
    if (!(t_end > 0.0)) throw std::invalid_argument("simulate: t_end must be > 0");
    if (x0.size() != sys.dimension()) {
        throw std::invalid_argument("simulate: x0 dimension mismatch");
    }
    if (!all_finite(x0)) throw std::invalid_argument("simulate: x0 must be finite");
    if (rule_is_time_dependent(sys.rule()) && t_end > 1.0) {
        throw std::invalid_argument(
            "simulate: time-pulse interpolants are only defined on [0, 1]; t_end > 1 "
            "is not supported");
    }

    const bool blended = mode == SimMode::Blended;
    if (blended && !rule_is_blended(sys.rule())) {
        throw std::invalid_argument("simulate: Blended mode needs a blended rule");
    }

    // One evaluator reused across all stages; identical code path to
    // blend_weights so recorded weights match bitwise.
    std::optional<WeightEvaluator> eval;
    if (blended) eval.emplace(sys.rule(), sys.subsystem_count());

    const auto& subs = sys.subsystems();
    auto rhs = [&](double t, std::span<const double> x) -> std::vector<double> {
        if (!blended) return subs[active_subsystem(sys, t, x)].A.apply(x);
        const auto w = (*eval)(t, x);
        std::vector<double> out(sys.dimension(), 0.0);
        for (size_t i = 0; i < w.size(); ++i) {
            const auto v = subs[i].A.apply(x);
            for (size_t j = 0; j < out.size(); ++j) out[j] += w[i] * v[j];
        }
        return out;
    };
    auto record_weights = [&](double t, std::span<const double> x) {
        if (blended) return (*eval)(t, x);
        return one_hot(sys.subsystem_count(), active_subsystem(sys, t, x));
    };

    Trajectory traj;
    std::vector<double> x(x0.begin(), x0.end());
    traj.times.push_back(0.0);
    traj.states.emplace_back(x);
    traj.weights.push_back(record_weights(0.0, x));
    if (inf_norm(x) > kDivergenceThreshold) {
        traj.status = SimStatus::DivergenceDetected;
        return traj;
    }

    const auto steps = static_cast<size_t>(std::ceil(t_end / dt - 1e-9));
    const size_t n = sys.dimension();
    std::vector<double> k1, k2, k3, k4, stage(n);
    for (size_t step = 1; step <= steps; ++step) {
        const double t_prev = traj.times.back();
        const double t_next = std::min(static_cast<double>(step) * dt, t_end);
        const double h = t_next - t_prev;

        k1 = rhs(t_prev, x);
        for (size_t j = 0; j < n; ++j) stage[j] = x[j] + 0.5 * h * k1[j];
        k2 = rhs(t_prev + 0.5 * h, stage);
        for (size_t j = 0; j < n; ++j) stage[j] = x[j] + 0.5 * h * k2[j];
        k3 = rhs(t_prev + 0.5 * h, stage);
        for (size_t j = 0; j < n; ++j) stage[j] = x[j] + h * k3[j];
        k4 = rhs(t_prev + h, stage);
        for (size_t j = 0; j < n; ++j) {
            x[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }

        if (!all_finite(x)) {
            throw std::runtime_error("simulate: non-finite state encountered; last valid "
                                     "time t=" + repr(t_prev));
        }
        traj.times.push_back(t_next);
        traj.states.emplace_back(x);
        traj.weights.push_back(record_weights(t_next, x));
        if (inf_norm(x) > kDivergenceThreshold) {
            traj.status = SimStatus::DivergenceDetected;
            break;
        }
    }
    return traj;
}

}  // namespace bswitch
