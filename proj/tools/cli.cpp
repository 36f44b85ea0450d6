#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uavvlc/bench.hpp"
#include "uavvlc/config.hpp"
#include "uavvlc/report_io.hpp"

namespace uavvlc::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string config_path;
  std::vector<std::string> algorithms;
  std::optional<std::uint64_t> seed;
  std::string seed_range;
  std::optional<std::size_t> iterations;
  std::optional<std::size_t> population;
  std::string out_dir;
  std::optional<int> case_number;
  std::optional<std::size_t> grid;
  std::vector<std::string> emit;
  std::optional<std::size_t> jobs;
};

struct Emit {
  bool csv = false;
  bool json = false;
  bool svg = false;
};

std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw ConfigError("--seeds: expected N..M, got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const std::uint64_t lo = std::stoull(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument("trailing");
    const std::uint64_t hi = std::stoull(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument("trailing");
    if (hi < lo) {
      throw ConfigError("--seeds: range end precedes its start");
    }
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = lo; s <= hi; ++s) {
      seeds.push_back(s);
    }
    return seeds;
  } catch (const std::logic_error&) {
    throw ConfigError("--seeds: expected N..M with non-negative integers, got '" + text + "'");
  }
}

RunConfig effective_config(const Options& opt) {
  RunConfig config = parse_config(opt.config_path);
  if (opt.case_number) {
    apply_case_preset(config, *opt.case_number);
  }
  if (opt.grid) {
    config.scenario.grid_per_side = *opt.grid;
  }
  if (!opt.algorithms.empty()) {
    config.algorithm.names.clear();
    for (const std::string& name : opt.algorithms) {
      const auto a = parse_algorithm(name);
      if (!a) {
        throw ConfigError("--algo: unknown algorithm '" + name + "'");
      }
      if (std::find(config.algorithm.names.begin(), config.algorithm.names.end(), *a) ==
          config.algorithm.names.end()) {
        config.algorithm.names.push_back(*a);
      }
    }
  }
  if (opt.seed && !opt.seed_range.empty()) {
    throw ConfigError("--seed and --seeds are mutually exclusive");
  }
  if (opt.seed) {
    config.run.seeds = {*opt.seed};
  } else if (!opt.seed_range.empty()) {
    config.run.seeds = parse_seed_range(opt.seed_range);
  }
  if (opt.iterations) config.algorithm.iterations = *opt.iterations;
  if (opt.population) config.algorithm.population = *opt.population;
  if (opt.jobs) config.run.jobs = *opt.jobs;
  if (!opt.out_dir.empty()) {
    config.run.output_dir = opt.out_dir;
  } else if (config.run.output_dir.empty()) {
    const char* env = std::getenv(kOutputRootEnv);
    config.run.output_dir = env != nullptr && *env != '\0' ? env : "out";
  }
  validate_config(config);
  return config;
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  writer(out);
  if (!out) {
    throw std::runtime_error("write failed for " + path.string());
  }
}

// Fills a staging directory, then swaps it in so an earlier run directory is
// either left untouched or replaced whole.
template <typename Filler>
void publish_directory(const fs::path& target, Filler&& fill) {
  fs::path staging = target;
  staging += ".partial";
  fs::remove_all(staging);
  fs::create_directories(staging);
  fill(staging);
  fs::remove_all(target);
  fs::rename(staging, target);
}

void write_run(const fs::path& dir, const RunReport& r, const Scenario& scenario,
               const Emit& emit) {
  if (emit.json) {
    write_file(dir / "archive.json", [&](std::ostream& o) { write_archive_json(o, r.archive); });
    if (r.algorithm == Algorithm::MoeadCicm) {
      write_file(dir / "init_population.json", [&](std::ostream& o) {
        write_population_json(o, r.initial_population, r.initial_fitness);
      });
    }
  }
  if (emit.csv) {
    write_file(dir / "metrics.csv", [&](std::ostream& o) { write_metrics_csv(o, r.metrics); });
    write_file(dir / "powergrid.csv", [&](std::ostream& o) { write_power_grid_csv(o, r.grid); });
    write_file(dir / "report.csv", [&](std::ostream& o) { write_report_csv(o, r); });
  }
  if (emit.svg) {
    write_file(dir / "powergrid.svg", [&](std::ostream& o) {
      write_heatmap_svg(o, r.grid, r.knee_solution, scenario.region());
    });
    write_file(dir / "front.svg", [&](std::ostream& o) { write_front_svg(o, r.archive); });
  }
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void print_summary(std::ostream& out, const ExperimentResult& result) {
  out << std::left << std::setw(12) << "algorithm" << std::right << std::setw(14) << "f1"
      << std::setw(14) << "f2" << std::setw(14) << "f3" << std::setw(12) << "area_m2"
      << std::setw(14) << "hypervolume" << '\n';
  for (const SummaryRow& row : result.summary) {
    out << std::left << std::setw(12) << algorithm_name(row.algorithm) << std::right
        << std::setw(14) << format_number(row.mean_knee[0]) << std::setw(14)
        << format_number(row.mean_knee[1]) << std::setw(14) << format_number(row.mean_knee[2])
        << std::setw(12) << format_number(row.mean_area_m2) << std::setw(14)
        << format_number(row.mean_hypervolume) << '\n';
  }
}

int execute(const Options& opt, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::optional<Scenario> scenario;
  Emit emit;
  try {
    config = effective_config(opt);
    scenario.emplace(build_scenario(config));
    if (opt.emit.empty()) {
      emit.csv = emit.json = true;
    }
    for (const std::string& e : opt.emit) {
      emit.csv |= e == "csv";
      emit.json |= e == "json";
      emit.svg |= e == "svg";
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    const ExperimentBudget budget = build_budget(config);
    const ExperimentResult result = run_experiment(*scenario, config.algorithm.names,
                                                   config.run.seeds, budget, config.run.jobs);

    const fs::path case_dir = fs::path(config.run.output_dir) / config.scenario.label;
    fs::create_directories(case_dir);
    write_file(case_dir / "config.json",
               [&](std::ostream& o) { o << serialize_config(config); });
    for (const RunReport& r : result.runs) {
      const fs::path algo_dir = case_dir / std::string(algorithm_name(r.algorithm));
      fs::create_directories(algo_dir);
      publish_directory(algo_dir / std::to_string(r.seed),
                        [&](const fs::path& dir) { write_run(dir, r, *scenario, emit); });
    }
    if (emit.csv) {
      const fs::path staging = case_dir / "summary.csv.partial";
      write_file(staging, [&](std::ostream& o) { write_summary_csv(o, result.summary); });
      fs::rename(staging, case_dir / "summary.csv");
    }
    write_file(case_dir / "run.log", [&](std::ostream& o) {
      o << "finished " << timestamp() << '\n';
      for (const RunReport& r : result.runs) {
        o << algorithm_name(r.algorithm) << " seed " << r.seed << " wall_time_s "
          << format_number(r.wall_time_s) << '\n';
      }
    });

    print_summary(out, result);
    out << "artifacts: " << case_dir.string() << '\n';
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-UAV VLC deployment optimizer (decomposition-based MOEA)"};
  Options opt;
  app.option_defaults()->always_capture_default(false);
  app.add_option("--config", opt.config_path, "Run configuration (JSON)")->required();
  app.add_option("--algo", opt.algorithms,
                 "Algorithm to run: moead, moead-cicm, random, uniform (repeatable)");
  app.add_option("--seed", opt.seed, "Single run seed");
  app.add_option("--seeds", opt.seed_range, "Inclusive seed range N..M");
  app.add_option("--iters", opt.iterations, "Iteration budget");
  app.add_option("--pop", opt.population, "Population size target");
  app.add_option("--out", opt.out_dir, "Output root directory");
  app.add_option("--case", opt.case_number, "Geometry preset: 1 or 2")
      ->check(CLI::IsMember({1, 2}));
  app.add_option("--grid", opt.grid, "Receivers per side (overrides the preset)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  app.add_option("--emit", opt.emit, "Artifact formats: csv, json, svg (repeatable)")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  app.add_option("--jobs", opt.jobs, "Concurrent runs")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1024}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  return execute(opt, out, err);
}

} // namespace uavvlc::cli
