#include "uavvlc/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace uavvlc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(path + ": " + message);
}

// Walks one JSON object, rejecting keys that are never read.
class Section {
public:
  Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) {
      fail(path_.empty() ? "<root>" : path_, "expected an object");
    }
  }

  ~Section() noexcept(false) {
    if (std::uncaught_exceptions() > 0) {
      return;
    }
    for (const auto& [key, value] : node_.items()) {
      if (!seen_.contains(key)) {
        fail(child(key), "unknown key");
      }
    }
  }

  Section(const Section&) = delete;
  Section& operator=(const Section&) = delete;

  const json* find(const std::string& key) {
    seen_.insert(key);
    const auto it = node_.find(key);
    if (it == node_.end() || it->is_null()) {
      return nullptr;
    }
    return &*it;
  }

  std::string child(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  void number(const std::string& key, double& out) {
    if (const json* v = find(key)) {
      if (!v->is_number()) fail(child(key), "expected a number");
      out = v->get<double>();
    }
  }

  template <typename T>
  void unsigned_int(const std::string& key, T& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_unsigned()) fail(child(key), "expected a non-negative integer");
      out = v->get<T>();
    }
  }

  void integer(const std::string& key, int& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_integer()) fail(child(key), "expected an integer");
      out = v->get<int>();
    }
  }

  void string(const std::string& key, std::string& out) {
    if (const json* v = find(key)) {
      if (!v->is_string()) fail(child(key), "expected a string");
      out = v->get<std::string>();
    }
  }

private:
  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

std::array<double, 2> read_xy(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    fail(path, "expected an [x, y] pair of numbers");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

void read_scenario(const json& node, ScenarioConfig& s) {
  Section sec(node, "scenario");
  sec.string("label", s.label);
  if (const json* r = sec.find("region")) {
    Section reg(*r, "scenario.region");
    reg.number("x_min", s.region.x_min);
    reg.number("x_max", s.region.x_max);
    reg.number("y_min", s.region.y_min);
    reg.number("y_max", s.region.y_max);
  }
  sec.unsigned_int("uav_count", s.uav_count);
  sec.unsigned_int("grid_per_side", s.grid_per_side);
  sec.number("altitude", s.altitude);
  if (const json* e = sec.find("eavesdropper")) {
    s.eavesdropper = read_xy(*e, "scenario.eavesdropper");
  }
  if (const json* st = sec.find("start_positions")) {
    if (!st->is_array()) fail("scenario.start_positions", "expected an array of [x, y] pairs");
    std::vector<std::array<double, 2>> starts;
    for (std::size_t i = 0; i < st->size(); ++i) {
      starts.push_back(read_xy((*st)[i], "scenario.start_positions[" + std::to_string(i) + "]"));
    }
    s.start_positions = std::move(starts);
  }
  sec.unsigned_int("start_seed", s.start_seed);
  if (const json* pb = sec.find("power_bounds")) {
    Section p(*pb, "scenario.power_bounds");
    p.number("min_w", s.power_bounds.min_w);
    p.number("max_w", s.power_bounds.max_w);
  }
  sec.number("cruise_speed", s.cruise_speed);
}

void read_vlc(const json& node, VlcConfig& v) {
  Section sec(node, "vlc");
  sec.number("semi_angle_half_power_deg", v.semi_angle_half_power_deg);
  sec.number("fov_semi_angle_deg", v.fov_semi_angle_deg);
  sec.number("detector_area_m2", v.detector_area_m2);
  sec.number("refractive_index", v.refractive_index);
  sec.number("noise_db", v.noise_db);
  sec.integer("distance_exponent", v.distance_exponent);
}

void read_rotor(const json& node, RotorcraftParams& r) {
  Section sec(node, "rotor");
  sec.number("blade_profile_power_w", r.blade_profile_power_w);
  sec.number("induced_power_w", r.induced_power_w);
  sec.number("tip_speed", r.tip_speed);
  sec.number("mean_induced_velocity", r.mean_induced_velocity);
  sec.number("fuselage_drag_ratio", r.fuselage_drag_ratio);
  sec.number("rotor_solidity", r.rotor_solidity);
  sec.number("air_density", r.air_density);
  sec.number("rotor_disc_area", r.rotor_disc_area);
}

Algorithm read_algorithm_name(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected an algorithm name");
  const auto a = parse_algorithm(v.get<std::string>());
  if (!a) fail(path, "unknown algorithm '" + v.get<std::string>() +
                         "' (expected moead, moead-cicm, random or uniform)");
  return *a;
}

void read_algorithm(const json& node, AlgorithmConfig& a) {
  Section sec(node, "algorithm");
  if (const json* n = sec.find("name")) {
    a.names.clear();
    if (n->is_array()) {
      for (std::size_t i = 0; i < n->size(); ++i) {
        a.names.push_back(read_algorithm_name((*n)[i], "algorithm.name[" + std::to_string(i) + "]"));
      }
    } else {
      a.names.push_back(read_algorithm_name(*n, "algorithm.name"));
    }
  }
  sec.unsigned_int("population", a.population);
  sec.unsigned_int("iterations", a.iterations);
  sec.unsigned_int("mating_size", a.mating_size);
  sec.unsigned_int("replacement_size", a.replacement_size);
  sec.unsigned_int("archive_capacity", a.archive_capacity);
  if (const json* c = sec.find("cicm")) {
    Section cs(*c, "algorithm.cicm");
    cs.number("circle_a", a.cicm.circle_a);
    cs.number("circle_b", a.cicm.circle_b);
    cs.number("mutation_probability", a.cicm.mutation_probability);
    cs.unsigned_int("mutation_shape", a.cicm.mutation_shape);
  }
}

void read_run(const json& node, RunBlock& r) {
  Section sec(node, "run");
  if (const json* s = sec.find("seeds")) {
    if (!s->is_array()) fail("run.seeds", "expected an array of non-negative integers");
    r.seeds.clear();
    for (const json& v : *s) {
      if (!v.is_number_unsigned()) fail("run.seeds", "expected an array of non-negative integers");
      r.seeds.push_back(v.get<std::uint64_t>());
    }
  }
  sec.string("output_dir", r.output_dir);
  sec.unsigned_int("jobs", r.jobs);
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

void check(bool ok, const std::string& field, const std::string& rule) {
  if (!ok) {
    throw ConfigError(field + ": " + rule);
  }
}

bool finite(double v) { return std::isfinite(v); }

} // namespace

VlcParams VlcConfig::to_params() const {
  return {semi_angle_half_power_deg, fov_semi_angle_deg, detector_area_m2, refractive_index,
          noise_from_db(noise_db), distance_exponent};
}

RunConfig parse_config_text(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ConfigError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                      ": parse error: " + e.what());
  }
  RunConfig config;
  {
    Section root(doc, "");
    if (const json* s = root.find("scenario")) read_scenario(*s, config.scenario);
    if (const json* v = root.find("vlc")) read_vlc(*v, config.vlc);
    if (const json* r = root.find("rotor")) read_rotor(*r, config.rotor);
    if (const json* a = root.find("algorithm")) read_algorithm(*a, config.algorithm);
    if (const json* r = root.find("run")) read_run(*r, config.run);
  }
  validate_config(config);
  return config;
}

RunConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path.string() + ": cannot open config file");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str(), path.string());
}

std::string serialize_config(const RunConfig& c) {
  json scenario = {
      {"label", c.scenario.label},
      {"region",
       {{"x_min", c.scenario.region.x_min},
        {"x_max", c.scenario.region.x_max},
        {"y_min", c.scenario.region.y_min},
        {"y_max", c.scenario.region.y_max}}},
      {"uav_count", c.scenario.uav_count},
      {"grid_per_side", c.scenario.grid_per_side},
      {"altitude", c.scenario.altitude},
      {"start_seed", c.scenario.start_seed},
      {"power_bounds",
       {{"min_w", c.scenario.power_bounds.min_w}, {"max_w", c.scenario.power_bounds.max_w}}},
      {"cruise_speed", c.scenario.cruise_speed}};
  if (c.scenario.eavesdropper) {
    scenario["eavesdropper"] = *c.scenario.eavesdropper;
  }
  if (c.scenario.start_positions) {
    scenario["start_positions"] = *c.scenario.start_positions;
  }
  json names = json::array();
  for (Algorithm a : c.algorithm.names) {
    names.push_back(std::string(algorithm_name(a)));
  }
  const json doc = {
      {"scenario", scenario},
      {"vlc",
       {{"semi_angle_half_power_deg", c.vlc.semi_angle_half_power_deg},
        {"fov_semi_angle_deg", c.vlc.fov_semi_angle_deg},
        {"detector_area_m2", c.vlc.detector_area_m2},
        {"refractive_index", c.vlc.refractive_index},
        {"noise_db", c.vlc.noise_db},
        {"distance_exponent", c.vlc.distance_exponent}}},
      {"rotor",
       {{"blade_profile_power_w", c.rotor.blade_profile_power_w},
        {"induced_power_w", c.rotor.induced_power_w},
        {"tip_speed", c.rotor.tip_speed},
        {"mean_induced_velocity", c.rotor.mean_induced_velocity},
        {"fuselage_drag_ratio", c.rotor.fuselage_drag_ratio},
        {"rotor_solidity", c.rotor.rotor_solidity},
        {"air_density", c.rotor.air_density},
        {"rotor_disc_area", c.rotor.rotor_disc_area}}},
      {"algorithm",
       {{"name", names},
        {"population", c.algorithm.population},
        {"iterations", c.algorithm.iterations},
        {"mating_size", c.algorithm.mating_size},
        {"replacement_size", c.algorithm.replacement_size},
        {"archive_capacity", c.algorithm.archive_capacity},
        {"cicm",
         {{"circle_a", c.algorithm.cicm.circle_a},
          {"circle_b", c.algorithm.cicm.circle_b},
          {"mutation_probability", c.algorithm.cicm.mutation_probability},
          {"mutation_shape", c.algorithm.cicm.mutation_shape}}}}},
      {"run",
       {{"seeds", c.run.seeds}, {"output_dir", c.run.output_dir}, {"jobs", c.run.jobs}}}};
  return doc.dump(2) + "\n";
}

void validate_config(const RunConfig& c) {
  const ScenarioConfig& s = c.scenario;
  const Region& r = s.region;
  check(finite(r.x_min) && finite(r.x_max) && r.x_min < r.x_max, "scenario.region",
        "requires finite bounds with x_min < x_max");
  check(finite(r.y_min) && finite(r.y_max) && r.y_min < r.y_max, "scenario.region",
        "requires finite bounds with y_min < y_max");
  check(s.uav_count >= 1, "scenario.uav_count", "must be at least 1");
  check(s.grid_per_side >= 2, "scenario.grid_per_side", "must be at least 2");
  check(finite(s.altitude) && s.altitude > 0.0, "scenario.altitude", "must be positive");
  if (s.eavesdropper) {
    check(finite((*s.eavesdropper)[0]) && finite((*s.eavesdropper)[1]), "scenario.eavesdropper",
          "must be finite");
  }
  if (s.start_positions) {
    check(s.start_positions->size() == s.uav_count, "scenario.start_positions",
          "length must equal uav_count");
  }
  check(s.power_bounds.min_w > 0.0, "scenario.power_bounds.min_w", "must be positive");
  check(finite(s.power_bounds.max_w) && s.power_bounds.min_w < s.power_bounds.max_w,
        "scenario.power_bounds", "requires min_w < max_w");
  check(finite(s.cruise_speed) && s.cruise_speed > 0.0, "scenario.cruise_speed",
        "must be positive");

  const VlcConfig& v = c.vlc;
  check(v.semi_angle_half_power_deg > 0.0 && v.semi_angle_half_power_deg < 90.0,
        "vlc.semi_angle_half_power_deg", "must lie in (0, 90)");
  check(v.fov_semi_angle_deg > 0.0 && v.fov_semi_angle_deg <= 90.0, "vlc.fov_semi_angle_deg",
        "must lie in (0, 90]");
  check(v.detector_area_m2 > 0.0 && finite(v.detector_area_m2), "vlc.detector_area_m2",
        "must be positive");
  check(v.refractive_index >= 1.0 && finite(v.refractive_index), "vlc.refractive_index",
        "must be >= 1");
  check(finite(v.noise_db), "vlc.noise_db", "must be finite");
  check(v.distance_exponent == 1 || v.distance_exponent == 2, "vlc.distance_exponent",
        "must be 1 or 2");

  try {
    c.rotor.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("rotor: ") + e.what());
  }

  const AlgorithmConfig& a = c.algorithm;
  check(!a.names.empty(), "algorithm.name", "must name at least one algorithm");
  check(a.population >= kObjectiveCount, "algorithm.population", "must be at least 3");
  const std::size_t q = generate_weights(a.population).size();
  const std::size_t mating = resolve_neighborhood_size(a.mating_size, q);
  const std::size_t replacement = resolve_neighborhood_size(a.replacement_size, q);
  check(mating >= 2 && mating <= q, "algorithm.mating_size",
        "must lie in [2, " + std::to_string(q) + "]");
  check(replacement >= 1 && replacement <= q, "algorithm.replacement_size",
        "must lie in [1, " + std::to_string(q) + "]");
  check(a.archive_capacity >= 1, "algorithm.archive_capacity", "must be at least 1");
  check(finite(a.cicm.circle_a) && finite(a.cicm.circle_b), "algorithm.cicm",
        "circle_a and circle_b must be finite");
  check(a.cicm.mutation_probability >= 0.0 && a.cicm.mutation_probability <= 1.0,
        "algorithm.cicm.mutation_probability", "must lie in [0, 1]");
  check(a.cicm.mutation_shape >= 1, "algorithm.cicm.mutation_shape", "must be at least 1");

  check(c.run.jobs >= 1, "run.jobs", "must be at least 1");
}

void apply_case_preset(RunConfig& config, int case_number) {
  ScenarioConfig& s = config.scenario;
  switch (case_number) {
  case 1:
    s.label = "case1";
    s.region = {0.0, 8.0, 0.0, 8.0};
    s.uav_count = 8;
    s.grid_per_side = 80;
    break;
  case 2:
    s.label = "case2";
    s.region = {0.0, 10.0, 0.0, 10.0};
    s.uav_count = 12;
    s.grid_per_side = 100;
    break;
  default:
    throw ConfigError("--case: expected 1 or 2, got " + std::to_string(case_number));
  }
  s.altitude = 8.0;
}

Scenario build_scenario(const RunConfig& config) {
  validate_config(config);
  const ScenarioConfig& s = config.scenario;
  ScenarioDescription d;
  d.region = s.region;
  d.altitude = s.altitude;
  d.uav_count = s.uav_count;
  d.receivers = make_receiver_grid(s.region, s.grid_per_side);
  d.grid = {s.grid_per_side, s.grid_per_side};
  if (s.eavesdropper) {
    d.eavesdropper = {(*s.eavesdropper)[0], (*s.eavesdropper)[1], 0.0};
  } else {
    d.eavesdropper = {s.region.x_min + 0.75 * s.region.width(),
                      s.region.y_min + 0.75 * s.region.height(), 0.0};
  }
  if (s.start_positions) {
    for (const auto& xy : *s.start_positions) {
      d.start_positions.push_back({xy[0], xy[1], s.altitude});
    }
  } else {
    Rng rng(s.start_seed);
    for (std::size_t i = 0; i < s.uav_count; ++i) {
      const double x = rng.uniform(s.region.x_min, s.region.x_max);
      const double y = rng.uniform(s.region.y_min, s.region.y_max);
      d.start_positions.push_back({x, y, s.altitude});
    }
  }
  d.power_bounds = s.power_bounds;
  d.cruise_speed = s.cruise_speed;
  d.vlc = config.vlc.to_params();
  d.rotor = config.rotor;
  try {
    return Scenario(std::move(d));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

ExperimentBudget build_budget(const RunConfig& config) {
  ExperimentBudget b;
  b.moead.population_target = config.algorithm.population;
  b.moead.iterations = config.algorithm.iterations;
  b.moead.mating_size = config.algorithm.mating_size;
  b.moead.replacement_size = config.algorithm.replacement_size;
  b.moead.archive_capacity = config.algorithm.archive_capacity;
  b.cicm = config.algorithm.cicm;
  return b;
}

} // namespace uavvlc
