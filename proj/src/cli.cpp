#include "skoro/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skoro/core_types.hpp"
#include "skoro/freespace.hpp"
#include "skoro/oracle.hpp"
#include "skoro/trace_io.hpp"
#include "skoro/value_solver.hpp"

namespace skoro {

namespace {

struct CliConfig {
  std::string norm = "l2";
  long window = 0;  // 0 = unbounded
  double delta = 0.0;
  double tol = kDefaultTol;
  bool bijective = false;
  int grid = 100;
  std::string output = "json";
  std::string scale;
  std::vector<std::string> files;
};

std::vector<double> parse_scale(const std::string& spec) {
  std::vector<double> out;
  if (spec.empty()) return out;
  std::stringstream ss(spec);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      out.push_back(std::stod(field));
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadInput, "--scale: not a number: '" + field + "'");
    }
  }
  return out;
}

WindowSpec window_of(const CliConfig& cfg) {
  return cfg.window > 0 ? WindowSpec::bounded(cfg.window) : WindowSpec::unbounded();
}

SampledTrace load_trace(const CliConfig& cfg, const std::string& path) {
  return apply_scale(read_trace_file(path), parse_scale(cfg.scale));
}

nlohmann::json window_json(const CliConfig& cfg) {
  if (cfg.window > 0) return cfg.window;
  return nullptr;
}

void emit_result(const CliConfig& cfg, const nlohmann::json& doc, std::ostream& out) {
  if (cfg.output == "json") {
    out << doc.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : doc.items())
    out << key << " " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

int cmd_distance(const CliConfig& cfg, std::ostream& out, bool lifted) {
  const NormKind base = parse_norm(cfg.norm);
  const SampledTrace a = load_trace(cfg, cfg.files[0]);
  const SampledTrace b = load_trace(cfg, cfg.files[1]);
  const FrechetResult res =
      lifted ? skorokhod_compute(a, b, base, window_of(cfg), cfg.tol)
             : frechet_compute(interpolate(a), interpolate(b), base, window_of(cfg), cfg.tol);
  nlohmann::json doc{{"distance", res.value},
                     {"norm", cfg.norm},
                     {"window", window_json(cfg)},
                     {"achieved_bijective", res.achieved_bijective},
                     {"critical_value_count", res.critical_value_count}};
  if (std::isinf(res.value)) doc["distance"] = "inf";
  emit_result(cfg, doc, out);
  return 0;
}

int cmd_decide(const CliConfig& cfg, std::ostream& out) {
  const NormKind base = parse_norm(cfg.norm);
  const SampledTrace a = load_trace(cfg, cfg.files[0]);
  const SampledTrace b = load_trace(cfg, cfg.files[1]);
  const bool yes =
      decide_frechet(lift_trace(a), lift_trace(b), cfg.delta, skoro_norm(base),
                     cfg.bijective ? Mode::bijective : Mode::nonbijective, window_of(cfg),
                     cfg.tol);
  emit_result(cfg,
              nlohmann::json{{"decision", yes},
                             {"delta", cfg.delta},
                             {"norm", cfg.norm},
                             {"mode", cfg.bijective ? "bijective" : "nonbijective"},
                             {"window", window_json(cfg)}},
              out);
  return yes ? 0 : 1;
}

nlohmann::json interval_json(const Interval& iv) {
  if (iv.empty()) return nullptr;
  return nlohmann::json{iv.lo, iv.hi};
}

int cmd_freespace(const CliConfig& cfg, std::ostream& out) {
  const NormKind norm = skoro_norm(parse_norm(cfg.norm));
  const PolygonalCurve f = lift_trace(load_trace(cfg, cfg.files[0]));
  const PolygonalCurve g = lift_trace(load_trace(cfg, cfg.files[1]));
  const WindowSpec window = window_of(cfg);
  nlohmann::json cells = nlohmann::json::array();
  for (long i = 0; i < static_cast<long>(f.segments()); ++i)
    for (long j = 0; j < static_cast<long>(g.segments()); ++j) {
      if (!window.inside(i, j)) continue;
      const Cell cell{i, j};
      nlohmann::json entry{{"i", i}, {"j", j}};
      entry["bottom"] = interval_json(
          free_edge_interval(f, g, cell, EdgeId::bottom, cfg.delta, norm, cfg.tol).span);
      entry["right"] = interval_json(
          free_edge_interval(f, g, cell, EdgeId::right, cfg.delta, norm, cfg.tol).span);
      entry["top"] = interval_json(
          free_edge_interval(f, g, cell, EdgeId::top, cfg.delta, norm, cfg.tol).span);
      entry["left"] = interval_json(
          free_edge_interval(f, g, cell, EdgeId::left, cfg.delta, norm, cfg.tol).span);
      cells.push_back(std::move(entry));
    }
  out << cells.dump() << "\n";
  return 0;
}

int cmd_oracle(const CliConfig& cfg, std::ostream& out) {
  const NormKind norm = skoro_norm(parse_norm(cfg.norm));
  const PolygonalCurve f = lift_trace(load_trace(cfg, cfg.files[0]));
  const PolygonalCurve g = lift_trace(load_trace(cfg, cfg.files[1]));
  const OracleBounds bounds = oracle_frechet(f, g, norm, GridSpec{cfg.grid}, window_of(cfg));
  emit_result(cfg,
              nlohmann::json{{"lower", bounds.lower},
                             {"upper", bounds.upper},
                             {"grid", cfg.grid},
                             {"norm", cfg.norm}},
              out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  if (const char* env_tol = std::getenv("SKORO_TOL")) {
    try {
      cfg.tol = std::stod(env_tol);
    } catch (const std::exception&) {
      err << "error: SKORO_TOL: not a number: '" << env_tol << "'\n";
      return 2;
    }
  }

  CLI::App app{"Skorokhod and Frechet distances between polygonal traces"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* cmd, bool needs_delta) {
    cmd->add_option("--norm", cfg.norm, "Norm: l1, l2, or linf")->default_str("l2");
    cmd->add_option("--window", cfg.window, "Window width W (index band |i-j| <= W)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--tol", cfg.tol, "Absolute comparison tolerance");
    cmd->add_option("--scale", cfg.scale, "Ingestion scale factors c1,...,cn,ct");
    cmd->add_option("--output", cfg.output, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_str("json");
    cmd->add_option("files", cfg.files, "Two trace files (.csv or .json)")
        ->expected(2)
        ->required();
    if (needs_delta)
      cmd->add_option("--delta", cfg.delta, "Distance level delta")->required();
  };

  CLI::App* distance =
      app.add_subcommand("distance", "Skorokhod distance of two traces (time-lifted)");
  add_common(distance, false);
  CLI::App* frechet =
      app.add_subcommand("frechet", "Frechet distance of the raw value curves");
  add_common(frechet, false);
  CLI::App* decide =
      app.add_subcommand("decide", "Is the Skorokhod distance at most delta?");
  add_common(decide, true);
  decide->add_flag("--bijective", cfg.bijective,
                   "Require strictly increasing reparameterizations");
  CLI::App* freespace =
      app.add_subcommand("freespace", "Dump free-space edge intervals at delta");
  add_common(freespace, true);
  CLI::App* oracle =
      app.add_subcommand("oracle", "Brute-force Skorokhod distance bounds");
  add_common(oracle, false);
  oracle->add_option("--grid", cfg.grid, "Subdivisions per parameter unit")
      ->check(CLI::Range(2, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(distance)) return cmd_distance(cfg, out, true);
    if (app.got_subcommand(frechet)) return cmd_distance(cfg, out, false);
    if (app.got_subcommand(decide)) return cmd_decide(cfg, out);
    if (app.got_subcommand(freespace)) return cmd_freespace(cfg, out);
    if (app.got_subcommand(oracle)) return cmd_oracle(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace skoro
