#pragma once

#include <iosfwd>
#include <string>

#include "bswitch/switched.hpp"

namespace bswitch {

/// Parse a plain-text system description:
///
///   # comment
///   subsystem
///   -1 1
///   -1 -3
///
///   subsystem
///   0.01 3
///   -1 -4
///
///   rule state_sign            # state_sign | time_pulse | crisp_state_sign
///   delta 10                   #            | crisp_time_pulse
///   m 100
///   composed false
///   windows 1 0:0.2 0.4:1      # pulse rules: 1-based subsystem index
///   windows 2 0.2:0.4
///
/// Each `subsystem` keyword starts a matrix given as rows of
/// whitespace-separated reals. Defaults: rule state_sign, delta 10, m 100.
/// Throws std::invalid_argument with a line number on malformed input.
SwitchedSystem parse_system_config(std::istream& in);
SwitchedSystem parse_system_config_text(const std::string& text);
SwitchedSystem load_system_config(const std::string& path);

}  // namespace bswitch
