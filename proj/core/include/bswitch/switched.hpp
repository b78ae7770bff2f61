#pragma once

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bswitch/bernstein.hpp"
#include "bswitch/matrix.hpp"

namespace bswitch {

/// One linear mode dx/dt = A x of a switched system.
struct LinearSubsystem {
    Mat A;
};

using PulseWindows = std::vector<std::vector<std::pair<double, double>>>;

/// State-dependent rule driven by sign(delta * x1 * x2), blended through a
/// Bernstein step interpolant of degree `degree` (optionally composed with
/// itself once for a sharper transition). Exactly two subsystems.
struct StateSignRule {
    double delta = 10.0;
    unsigned degree = 100;
    bool composed = false;
};

/// Time-dependent rule: windows[i] lists the activation intervals of
/// subsystem i inside [0, 1]; blending samples each subsystem's window
/// union with a degree-`degree` Bernstein pulse and renormalizes.
struct TimePulseRule {
    PulseWindows windows;
    unsigned degree = 100;
};

/// Crisp counterparts select a single subsystem with no blending.
struct CrispStateSignRule {
    double delta = 10.0;
};

struct CrispTimePulseRule {
    PulseWindows windows;
};

using SwitchingRule =
    std::variant<StateSignRule, TimePulseRule, CrispStateSignRule, CrispTimePulseRule>;

bool rule_is_blended(const SwitchingRule& rule);
bool rule_is_time_dependent(const SwitchingRule& rule);

class SwitchedSystem {
public:
    /// Validates: >= 2 subsystems, square finite matrices of one dimension;
    /// sign rules need exactly 2 subsystems and dimension >= 2; pulse
    /// windows must lie in [0, 1], be well ordered, cover every subsystem
    /// index, and be pairwise disjoint in their interiors.
    SwitchedSystem(std::vector<LinearSubsystem> subsystems, SwitchingRule rule);

    size_t dimension() const { return dimension_; }
    size_t subsystem_count() const { return subsystems_.size(); }
    const std::vector<LinearSubsystem>& subsystems() const { return subsystems_; }
    const SwitchingRule& rule() const { return rule_; }

private:
    std::vector<LinearSubsystem> subsystems_;
    SwitchingRule rule_;
    size_t dimension_ = 0;
};

/// Index of the crisply active subsystem: sign rules pick subsystem 0 when
/// delta*x1*x2 >= 0, pulse rules pick the subsystem whose window contains t.
/// Throws when no pulse window is active at t.
size_t active_subsystem(const SwitchedSystem& sys, double t, std::span<const double> x);

/// A_active * x under the crisp rule.
std::vector<double> rhs_standard(const SwitchedSystem& sys, double t,
                                 std::span<const double> x);

/// Evaluates the blended switching weights once per call. For repeated
/// evaluation (simulation) build a WeightEvaluator instead; both paths share
/// the same code and produce bitwise-identical weights.
std::vector<double> blend_weights(const SwitchingRule& rule, size_t subsystem_count,
                                  double t, std::span<const double> x);

/// sum_i sigma_i(t, x) * A_i x with weights from blend_weights.
std::vector<double> rhs_bswitched(const SwitchedSystem& sys, double t,
                                  std::span<const double> x);

/// Precomputed Bernstein interpolants for a blended rule.
class WeightEvaluator {
public:
    WeightEvaluator(const SwitchingRule& rule, size_t subsystem_count);

    /// Weights are each in [0, 1]; the last one closes the sum to 1.
    std::vector<double> operator()(double t, std::span<const double> x) const;

private:
    struct SignData {
        SignWeight weight;
    };
    struct PulseData {
        std::vector<BernsteinSeries> unions;  // one per subsystem
    };
    std::variant<SignData, PulseData> data_;
    size_t count_;
};

enum class SimMode { Standard, Blended };
enum class SimStatus { Completed, DivergenceDetected };

/// |x|_inf cap beyond which a run is flagged divergent and halted.
constexpr double kDivergenceThreshold = 1e6;

struct Trajectory {
    std::vector<double> times;                 // strictly increasing, starts at 0
    std::vector<std::vector<double>> states;   // one row per time
    std::vector<std::vector<double>> weights;  // per-step sigma_i (one-hot in Standard mode)
    SimStatus status = SimStatus::Completed;

    const std::vector<double>& final_state() const { return states.back(); }
    double final_time() const { return times.back(); }
};

/// Fixed-step classical RK4 from t=0 to t_end. Switching is re-evaluated at
/// every stage; no event localization. Halts early with DivergenceDetected
/// once |x|_inf exceeds kDivergenceThreshold. Throws on non-finite states
/// (the message carries the last valid time) and on t_end > 1 for
/// time-pulse rules, whose interpolants only exist on [0, 1].
Trajectory simulate(const SwitchedSystem& sys, std::span<const double> x0, double t_end,
                    double dt, SimMode mode);

}  // namespace bswitch
