#include "bswitch/presets.hpp"

#include <stdexcept>

namespace bswitch {

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = {
        Preset{
            "example1",
            "stable switched pair under a state-sign rule",
            {Mat{{-1.0, 1.0}, {-1.0, -3.0}}, Mat{{0.01, 3.0}, {-1.0, -4.0}}},
            StateSignRule{10.0, 100, false},
        },
        Preset{
            "example2",
            "unstable switched pair under a state-sign rule (the first listed "
            "subsystem is the one active on x1*x2 >= 0; this activation order "
            "is the destabilizing one)",
            {Mat{{-1.0, 100.0}, {-10.0, -1.0}}, Mat{{-1.0, 10.0}, {-100.0, -1.0}}},
            StateSignRule{10.0, 100, false},
        },
        Preset{
            "basic",
            "single stable linear system (tabulated twice so both modes apply)",
            {Mat{{-1.0, 2.0}, {-3.0, -4.0}}, Mat{{-1.0, 2.0}, {-3.0, -4.0}}},
            StateSignRule{10.0, 100, false},
        },
    };
    return all;
}

const Preset& find_preset(const std::string& name) {
    for (const auto& p : presets()) {
        if (p.name == name) return p;
    }
    throw std::invalid_argument("unknown preset '" + name +
                                "' (known: example1, example2, basic)");
}

SwitchedSystem make_system(const Preset& preset) {
    return make_system(preset, preset.default_rule);
}

SwitchedSystem make_system(const Preset& preset, const SwitchingRule& rule_override) {
    std::vector<LinearSubsystem> subs;
    subs.reserve(preset.matrices.size());
    for (const auto& A : preset.matrices) subs.push_back(LinearSubsystem{A});
    return SwitchedSystem(std::move(subs), rule_override);
}

}  // namespace bswitch
