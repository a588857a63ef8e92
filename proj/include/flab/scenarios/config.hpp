#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "flab/scenarios/pipeline.hpp"

namespace flab::scenarios {

Scenario parse_scenario(std::string_view text);  // "xk" or "vk", any case
std::string to_string(Scenario s);

/// Scenario files hold "key = value" lines, '#' starts a comment, strings
/// may be quoted. Keys: scenario (xk | vk), knot, g, knot2, json (report
/// path), trace (true | false), workers. Values start from the defaults of
/// ScenarioConfig; an unknown key is a ParseError.
ScenarioConfig parse_scenario_config(std::istream& in, ScenarioConfig base = {});
ScenarioConfig load_scenario_config(const std::string& path, ScenarioConfig base = {});

}  // namespace flab::scenarios
