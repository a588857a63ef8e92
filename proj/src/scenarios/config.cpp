#include "flab/scenarios/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "CLI11.hpp"
#include "flab/error.hpp"

namespace flab::scenarios {

Scenario parse_scenario(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "xk") return Scenario::XK;
  if (s == "vk") return Scenario::VK;
  throw Error(ErrorCode::ParseError, "unknown scenario '" + std::string(text) + "', expected xk or vk");
}

std::string to_string(Scenario s) { return s == Scenario::XK ? "xk" : "vk"; }

namespace {

std::string single(const CLI::ConfigItem& item) {
  if (item.inputs.size() != 1) throw Error(ErrorCode::ParseError, "key '" + item.fullname() + "' needs one value");
  return item.inputs.front();
}

std::int64_t integer(const CLI::ConfigItem& item) {
  const std::string v = single(item);
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "key '" + item.fullname() + "' needs an integer, got '" + v + "'");
  }
}

bool boolean(const CLI::ConfigItem& item) {
  const std::string v = single(item);
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw Error(ErrorCode::ParseError, "key '" + item.fullname() + "' needs true or false, got '" + v + "'");
}

}  // namespace

ScenarioConfig parse_scenario_config(std::istream& in, ScenarioConfig c) {
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(in);
  } catch (const CLI::Error& e) {
    throw Error(ErrorCode::ParseError, std::string("scenario file: ") + e.what());
  }
  for (const auto& item : items) {
    const std::string key = item.fullname();
    if (key == "++" || key == "--") continue;  // section markers
    if (key == "scenario") {
      c.scenario = parse_scenario(single(item));
    } else if (key == "knot") {
      c.knot = knotforge::parse_knot_spec(single(item));
    } else if (key == "g") {
      c.genus = integer(item);
    } else if (key == "knot2") {
      c.second_knot = knotforge::parse_knot_spec(single(item));
    } else if (key == "json") {
      c.output = single(item);
      c.json = true;
    } else if (key == "trace") {
      c.trace = boolean(item);
    } else if (key == "workers") {
      const auto w = integer(item);
      if (w < 1 || w > 256) throw Error(ErrorCode::ParseError, "workers must be between 1 and 256");
      c.workers = static_cast<unsigned>(w);
    } else {
      throw Error(ErrorCode::ParseError, "unknown key '" + key + "' in scenario file");
    }
  }
  return c;
}

ScenarioConfig load_scenario_config(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  return parse_scenario_config(in, std::move(base));
}

}  // namespace flab::scenarios
