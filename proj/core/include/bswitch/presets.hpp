#pragma once

#include <string>
#include <vector>

#include "bswitch/switched.hpp"

namespace bswitch {

/// Built-in system definition selectable by name from the CLI.
struct Preset {
    std::string name;
    std::string description;
    std::vector<Mat> matrices;
    SwitchingRule default_rule;
};

/// example1: stable pair; example2: unstable pair; basic: a single stable
/// linear system tabulated twice so both simulation modes apply to it.
const std::vector<Preset>& presets();

/// Throws std::invalid_argument on unknown names.
const Preset& find_preset(const std::string& name);

SwitchedSystem make_system(const Preset& preset);
SwitchedSystem make_system(const Preset& preset, const SwitchingRule& rule_override);

}  // namespace bswitch
