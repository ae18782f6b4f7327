#include "ihopf/scenario.hpp"

#include <algorithm>

namespace ihopf {

const std::vector<std::string>& default_presets() {
  static const std::vector<std::string> p = [] {
    std::vector<std::string> names;
    for (const auto& info : preset_list()) names.push_back(info.name);
    return names;
  }();
  return p;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, cur.find_last_not_of(" \t") - b + 1));
    cur.clear();
  };
  for (char c : s) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  return out;
}

namespace {

std::vector<std::string> string_list(const ConfigValue& v) {
  if (v.kind == ConfigValue::Kind::String) return split_list(v.s);
  if (v.kind != ConfigValue::Kind::Array) throw ConfigError("expected a string or an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v.arr) out.push_back(e.as_string());
  return out;
}

int positive(const ConfigValue& v, const char* key, long long lo) {
  const long long x = v.as_int();
  if (x < lo || x > 1000) throw ConfigError(std::string(key) + " out of range: " + std::to_string(x));
  return static_cast<int>(x);
}

}  // namespace

ScenarioConfig scenario_from_config(const ConfigTable& t) {
  static const std::vector<std::string> known = {"preset", "cartan-file", "suite", "height", "seed", "depth", "json"};
  for (const auto& [k, v] : t)
    if (std::find(known.begin(), known.end(), k) == known.end()) throw ConfigError("unknown config key '" + k + "'");
  ScenarioConfig cfg;
  if (const auto* v = config_find(t, "preset")) cfg.presets = string_list(*v);
  if (const auto* v = config_find(t, "cartan-file")) cfg.cartan_files = string_list(*v);
  if (const auto* v = config_find(t, "suite")) {
    cfg.suites = string_list(*v);
    cfg.suites_given = true;
  }
  if (const auto* v = config_find(t, "height")) cfg.options.height = positive(*v, "height", 2);
  if (const auto* v = config_find(t, "depth")) cfg.options.depth = positive(*v, "depth", 1);
  if (const auto* v = config_find(t, "seed")) {
    const long long s = v->as_int();
    if (s < 0) throw ConfigError("seed must be nonnegative");
    cfg.options.seed = static_cast<std::uint64_t>(s);
  }
  if (const auto* v = config_find(t, "json")) cfg.json_path = v->as_string();
  return cfg;
}

std::vector<Job> scenario_jobs(const ScenarioConfig& cfg) {
  if (cfg.options.height < 2) throw ConfigError("height must be at least 2");
  if (cfg.options.depth < 1) throw ConfigError("depth must be at least 1");
  std::vector<CartanData> cartans;
  std::vector<std::string> names = cfg.presets;
  if (names.empty() && cfg.cartan_files.empty()) names = default_presets();
  for (const auto& p : names) cartans.push_back(preset(p));
  for (const auto& f : cfg.cartan_files) cartans.push_back(load_satake(load_config_file(f)));
  std::vector<std::string> suites = cfg.suites_given ? cfg.suites : suite_names();
  for (const auto& s : suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw ConfigError("unknown suite '" + s + "'");
  // registry order, duplicates dropped
  std::vector<std::string> ordered;
  for (const auto& s : suite_names())
    if (std::find(suites.begin(), suites.end(), s) != suites.end()) ordered.push_back(s);
  std::vector<Job> jobs;
  for (const auto& cd : cartans)
    for (const auto& s : ordered)
      if (suite_applies(s, cd)) jobs.push_back(Job{cd, s});
  return jobs;
}

}  // namespace ihopf
