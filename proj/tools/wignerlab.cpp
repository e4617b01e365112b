// wignerlab: boost composition, velocity-space holonomy, and ring-experiment
// predictions from the command line. Exit codes: 0 success, 2 usage/domain
// error, 3 numerical failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wigner/experiment.hpp"
#include "wigner/holonomy.hpp"
#include "wigner/lorentz.hpp"
#include "wigner/spin.hpp"
#include "wigner/version.hpp"

using nlohmann::json;
using namespace wigner;

namespace {

// All numeric output goes through one formatter: 9 significant digits.
std::string fmt9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

// JSON carries the same 9-significant-digit values as the text formats.
double round9(double x) { return std::strtod(fmt9(x).c_str(), nullptr); }

json jnum(double x) { return json(round9(x)); }

json jvec(const Vec3& v) { return json::array({jnum(v.x), jnum(v.y), jnum(v.z)}); }

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

json make_manifest(const std::string& command, json parameters) {
  return json{{"command", command},
              {"artifact_version", version_string},
              {"timestamp", iso_timestamp()},
              {"parameters", std::move(parameters)}};
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::fwrite(body.data(), 1, body.size(), stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  f << body;
}

// Data files written to disk get a sidecar manifest; stdout streams do not.
void write_manifest_sidecar(const std::string& data_path, const json& manifest) {
  if (data_path.empty()) return;
  write_output(data_path + ".manifest.json", manifest.dump(2) + "\n");
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  const char* p = text.c_str();
  while (*p != '\0') {
    char* end = nullptr;
    const double v = std::strtod(p, &end);
    if (end == p) throw std::invalid_argument("malformed number list: " + text);
    out.push_back(v);
    p = end;
    if (*p == ',') ++p;
    else if (*p != '\0') throw std::invalid_argument("malformed number list: " + text);
  }
  if (out.empty()) throw std::invalid_argument("empty number list");
  return out;
}

Velocity3 parse_velocity(const std::string& text, const std::string& units) {
  const std::vector<double> parts = parse_number_list(text);
  if (parts.size() != 3)
    throw std::invalid_argument("velocity must be three comma-separated numbers: " + text);
  Velocity3 v{parts[0], parts[1], parts[2]};
  if (units == "mps")
    v = {v.x / speed_of_light_si, v.y / speed_of_light_si, v.z / speed_of_light_si};
  ensure_subluminal(v);
  return v;
}

// ---------------------------------------------------------------- wigner-angle

struct WignerAngleArgs {
  std::string v1, v2;
  std::string units = "c";
  std::string format = "text";
  std::string out;
};

int run_wigner_angle(const WignerAngleArgs& args) {
  const Velocity3 v1 = parse_velocity(args.v1, args.units);
  const Velocity3 v2 = parse_velocity(args.v2, args.units);
  const LorentzTransform t =
      compose(boost_from_velocity(v2), boost_from_velocity(v1));
  const BoostRotation d = decompose_boost_rotation(t);
  const double deg = d.rotation.angle * degrees_per_radian;

  const json params{
      {"units_in", args.units},
      {"v1_c", jvec(v1.vec())},
      {"v2_c", jvec(v2.vec())},
      {"v1_mps", jvec(speed_of_light_si * v1.vec())},
      {"v2_mps", jvec(speed_of_light_si * v2.vec())},
  };

  if (args.format == "json") {
    const json doc{{"manifest", make_manifest("wigner-angle", params)},
                   {"result",
                    {{"composed_velocity_c", jvec(d.velocity.vec())},
                     {"composed_speed_c", jnum(d.velocity.speed())},
                     {"composed_velocity_mps", jvec(speed_of_light_si * d.velocity.vec())},
                     {"axis", jvec(d.rotation.axis)},
                     {"angle_rad", jnum(d.rotation.angle)},
                     {"angle_deg", jnum(deg)}}}};
    write_output(args.out, doc.dump(2) + "\n");
    return 0;
  }

  std::string body;
  body += "composed velocity (c): " + fmt9(d.velocity.x) + " " + fmt9(d.velocity.y) +
          " " + fmt9(d.velocity.z) + "\n";
  body += "composed speed (c): " + fmt9(d.velocity.speed()) + "\n";
  body += "rotation axis: " + fmt9(d.rotation.axis.x) + " " + fmt9(d.rotation.axis.y) +
          " " + fmt9(d.rotation.axis.z) + "\n";
  body += "rotation angle: " + fmt9(d.rotation.angle) + " rad = " + fmt9(deg) + " deg\n";
  write_output(args.out, body);
  write_manifest_sidecar(args.out, make_manifest("wigner-angle", params));
  return 0;
}

// ----------------------------------------------------------------------- orbit

struct OrbitArgs {
  double speed = 0.0;
  std::int64_t turns = 1;
  std::int64_t steps = 1000;
  double closure_tol = 1e-8;
  std::int64_t reproject_interval = 1024;
  std::int64_t stride = 1;
  std::string format = "csv";
  std::string out;
};

int run_orbit(const OrbitArgs& args) {
  if (args.stride < 1) throw std::invalid_argument("stride must be >= 1");

  std::string csv = "step,theta_rad,accumulated_angle_rad\n";
  json steps = json::array();
  const std::int64_t last = args.turns * args.steps;

  TransportOptions opt;
  opt.closure_tolerance = args.closure_tol;
  opt.reproject_interval = args.reproject_interval;
  opt.observer = [&](std::int64_t n, double theta, double accumulated) {
    if (n % args.stride != 0 && n != last) return;
    if (args.format == "json") {
      steps.push_back({{"step", n},
                       {"theta_rad", jnum(theta)},
                       {"accumulated_angle_rad", jnum(accumulated)}});
    } else {
      csv += std::to_string(n) + "," + fmt9(theta) + "," + fmt9(accumulated) + "\n";
    }
  };

  const HolonomyResult r = transport_loop({args.speed, args.turns, args.steps}, opt);
  const double rel = (r.discrete_angle - r.analytic_angle) / r.analytic_angle;

  const json params{{"speed_c", jnum(args.speed)},
                    {"turns", args.turns},
                    {"steps_per_turn", args.steps},
                    {"closure_tolerance", jnum(args.closure_tol)},
                    {"reproject_interval", args.reproject_interval},
                    {"stride", args.stride}};
  const json manifest = make_manifest("orbit", params);

  std::string summary;
  summary += "analytic angle (rad): " + fmt9(r.analytic_angle) + "\n";
  summary += "discrete angle (rad): " + fmt9(r.discrete_angle) + "\n";
  summary += "relative error: " + fmt9(rel) + "\n";
  summary += "axis: " + fmt9(r.axis.x) + " " + fmt9(r.axis.y) + " " + fmt9(r.axis.z) + "\n";
  summary += "residual boost speed: " + fmt9(r.residual_boost_speed) + "\n";

  if (args.format == "json") {
    const json doc{{"manifest", manifest},
                   {"summary",
                    {{"analytic_angle_rad", jnum(r.analytic_angle)},
                     {"discrete_angle_rad", jnum(r.discrete_angle)},
                     {"relative_error", jnum(rel)},
                     {"axis", jvec(r.axis)},
                     {"residual_boost_speed", jnum(r.residual_boost_speed)}}},
                   {"steps", steps}};
    write_output(args.out, doc.dump(2) + "\n");
    return 0;
  }

  write_output(args.out, csv);
  write_manifest_sidecar(args.out, manifest);
  // Summary goes wherever the CSV is not.
  if (args.out.empty()) std::cerr << summary;
  else std::cout << summary;
  return 0;
}

// ------------------------------------------------------------------ experiment

struct ExperimentArgs {
  double speed = 0.0;
  double radius = 0.0;
  double duration = 0.0;
  double lifetime = 887.0;
  std::int64_t counts = 0;  // 0 = exact mode
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
};

json experiment_params(const ExperimentArgs& args) {
  return json{{"speed_mps", jnum(args.speed)},
              {"beta", jnum(args.speed / speed_of_light_si)},
              {"radius_m", jnum(args.radius)},
              {"duration_s", jnum(args.duration)},
              {"lifetime_s", jnum(args.lifetime)},
              {"counts", args.counts > 0 ? json(args.counts) : json(nullptr)},
              {"seed", args.counts > 0 ? json(args.seed) : json(nullptr)}};
}

int run_experiment(const ExperimentArgs& args) {
  ExperimentConfig cfg;
  cfg.speed_si = args.speed;
  cfg.radius_si = args.radius;
  cfg.duration_si = args.duration;
  cfg.lifetime_si = args.lifetime;
  if (args.counts > 0) cfg.shot_noise = ShotNoiseConfig{args.counts, args.seed};

  const ExperimentResult r = total_wigner_rotation(cfg);
  const json manifest = make_manifest("experiment", experiment_params(args));

  if (args.format == "json") {
    json result{{"speed_mps", jnum(args.speed)},
                {"beta", jnum(args.speed / speed_of_light_si)},
                {"radius_m", jnum(args.radius)},
                {"duration_s", jnum(args.duration)},
                {"lifetime_s", jnum(args.lifetime)},
                {"revolutions", jnum(r.revolutions)},
                {"angle_per_revolution_rad", jnum(r.angle_per_revolution)},
                {"total_angle_rad", jnum(r.total_angle_rad)},
                {"total_angle_deg", jnum(r.total_angle_deg)},
                {"survival_fraction", jnum(r.survival_fraction)},
                {"measured_angle_deg", jnum(r.measured_angle_deg)},
                {"final_spin_bloch", jvec(bloch_vector(r.final_spin).vec())}};
    if (r.counted) {
      result["counted"] = {
          {"total", r.counted->total},
          {"parallel", r.counted->parallel},
          {"estimated_angle_rad", jnum(r.counted->estimated_angle)},
          {"estimated_angle_deg", jnum(r.counted->estimated_angle * degrees_per_radian)}};
    }
    const json doc{{"manifest", manifest}, {"result", result}};
    write_output(args.out, doc.dump(2) + "\n");
    return 0;
  }

  if (args.format == "csv") {
    std::string csv = "radius_m,duration_s,omega_T_deg,survival_fraction\n";
    csv += fmt9(args.radius) + "," + fmt9(args.duration) + "," + fmt9(r.total_angle_deg) +
           "," + fmt9(r.survival_fraction) + "\n";
    write_output(args.out, csv);
    write_manifest_sidecar(args.out, manifest);
    return 0;
  }

  std::string body;
  body += "speed (m/s): " + fmt9(args.speed) + "\n";
  body += "beta: " + fmt9(args.speed / speed_of_light_si) + "\n";
  body += "radius (m): " + fmt9(args.radius) + "\n";
  body += "duration (s): " + fmt9(args.duration) + "\n";
  body += "revolutions: " + fmt9(r.revolutions) + "\n";
  body += "angle per revolution (rad): " + fmt9(r.angle_per_revolution) + "\n";
  body += "total rotation: " + fmt9(r.total_angle_rad) + " rad = " +
          fmt9(r.total_angle_deg) + " deg\n";
  body += "survival fraction: " + fmt9(r.survival_fraction) + "\n";
  body += "measured angle (deg): " + fmt9(r.measured_angle_deg) + "\n";
  if (r.counted) {
    body += "surviving counts: " + std::to_string(r.counted->total) + " of " +
            std::to_string(args.counts) + "\n";
    body += "parallel counts: " + std::to_string(r.counted->parallel) + "\n";
    body += "estimated angle (deg): " +
            fmt9(r.counted->estimated_angle * degrees_per_radian) + "\n";
  }
  write_output(args.out, body);
  write_manifest_sidecar(args.out, manifest);
  return 0;
}

// ----------------------------------------------------------------------- sweep

struct SweepSpec {
  double speed = 2000.0;
  double lifetime = 887.0;
  std::vector<double> radii;
  std::vector<double> durations;
  std::int64_t counts = 0;
  std::uint64_t seed = 0;
};

std::vector<double> spaced_grid(double min, double max, std::int64_t count,
                                const std::string& spacing) {
  if (!(min > 0.0) || !(max >= min)) throw std::invalid_argument("bad radius range");
  if (count < 1) throw std::invalid_argument("radius count must be >= 1");
  if (count == 1) {
    if (min != max) throw std::invalid_argument("count 1 needs min == max");
    return {min};
  }
  if (spacing != "log" && spacing != "linear")
    throw std::invalid_argument("spacing must be log or linear");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    out.push_back(spacing == "log" ? min * std::pow(max / min, f)
                                   : min + f * (max - min));
  }
  return out;
}

// Default grid: 64 log-spaced radii over [0.5, 10] mm, with the 2 mm
// reference radius spliced in so the quoted operating point is always a row.
std::vector<double> default_radii() {
  std::vector<double> radii = spaced_grid(0.5e-3, 10.0e-3, 64, "log");
  const double anchor = 2.0e-3;
  bool present = false;
  for (const double r : radii) present = present || r == anchor;
  if (!present) {
    radii.push_back(anchor);
    std::sort(radii.begin(), radii.end());
  }
  return radii;
}

std::vector<double> multiples_of(const std::vector<double>& multiples, double lifetime) {
  std::vector<double> out;
  out.reserve(multiples.size());
  for (const double m : multiples) out.push_back(m * lifetime);
  return out;
}

double require_number(const json& j, const std::string& key) {
  if (!j.at(key).is_number()) throw std::invalid_argument("config key " + key + " must be a number");
  return j.at(key).get<double>();
}

SweepSpec parse_sweep_config(const json& j) {
  static const std::set<std::string> known{"speed_mps", "radii_m", "durations_s",
                                           "lifetime_s", "counts", "seed"};
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& item : j.items())
    if (known.find(item.key()) == known.end())
      throw std::invalid_argument("unknown config key: " + item.key());

  SweepSpec spec;
  if (j.contains("speed_mps")) spec.speed = require_number(j, "speed_mps");
  if (j.contains("lifetime_s")) spec.lifetime = require_number(j, "lifetime_s");
  if (j.contains("counts")) spec.counts = j.at("counts").get<std::int64_t>();
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();

  if (!j.contains("radii_m")) {
    spec.radii = default_radii();
  } else if (j.at("radii_m").is_array()) {
    spec.radii = j.at("radii_m").get<std::vector<double>>();
  } else if (j.at("radii_m").is_object()) {
    const json& g = j.at("radii_m");
    static const std::set<std::string> grid_keys{"min", "max", "count", "spacing"};
    for (const auto& item : g.items())
      if (grid_keys.find(item.key()) == grid_keys.end())
        throw std::invalid_argument("unknown radii_m key: " + item.key());
    spec.radii = spaced_grid(require_number(g, "min"), require_number(g, "max"),
                             g.at("count").get<std::int64_t>(),
                             g.value("spacing", std::string("log")));
  } else {
    throw std::invalid_argument("radii_m must be a list or a {min,max,count,spacing} object");
  }

  if (!j.contains("durations_s")) {
    spec.durations = multiples_of({1.0, 2.0, 3.0, 4.0}, spec.lifetime);
  } else if (j.at("durations_s").is_array()) {
    spec.durations = j.at("durations_s").get<std::vector<double>>();
  } else if (j.at("durations_s").is_object()) {
    const json& g = j.at("durations_s");
    for (const auto& item : g.items())
      if (item.key() != "lifetime_multiples")
        throw std::invalid_argument("unknown durations_s key: " + item.key());
    spec.durations =
        multiples_of(g.at("lifetime_multiples").get<std::vector<double>>(), spec.lifetime);
  } else {
    throw std::invalid_argument(
        "durations_s must be a list or a {lifetime_multiples} object");
  }
  return spec;
}

struct SweepArgs {
  std::string config;
  double speed = 2000.0;
  double lifetime = 887.0;
  double radius_min = 0.5e-3;
  double radius_max = 10.0e-3;
  std::int64_t radius_count = 64;
  std::string radius_spacing = "log";
  std::string radii;      // explicit list overrides the range
  std::string durations;  // explicit list of seconds
  std::string multiples;  // lifetime multiples
  std::int64_t counts = 0;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
  bool explicit_range = false;
};

int run_sweep(const SweepArgs& args) {
  SweepSpec spec;
  if (!args.config.empty()) {
    std::ifstream f(args.config);
    if (!f) throw std::invalid_argument("cannot open config file: " + args.config);
    json j;
    try {
      j = json::parse(f);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(std::string("malformed config JSON: ") + e.what());
    }
    spec = parse_sweep_config(j);
  } else {
    spec.speed = args.speed;
    spec.lifetime = args.lifetime;
    spec.counts = args.counts;
    spec.seed = args.seed;
    if (!args.radii.empty())
      spec.radii = parse_number_list(args.radii);
    else if (args.explicit_range)
      spec.radii = spaced_grid(args.radius_min, args.radius_max, args.radius_count,
                               args.radius_spacing);
    else
      spec.radii = default_radii();
    if (!args.durations.empty())
      spec.durations = parse_number_list(args.durations);
    else
      spec.durations = multiples_of(
          args.multiples.empty() ? std::vector<double>{1.0, 2.0, 3.0, 4.0}
                                 : parse_number_list(args.multiples),
          spec.lifetime);
  }

  ExperimentConfig base;
  base.speed_si = spec.speed;
  base.lifetime_si = spec.lifetime;
  if (spec.counts > 0) base.shot_noise = ShotNoiseConfig{spec.counts, spec.seed};

  const std::vector<SweepCell> cells = sweep_radius(base, spec.radii, spec.durations);

  json radii_json = json::array();
  for (const double r : spec.radii) radii_json.push_back(jnum(r));
  json durations_json = json::array();
  for (const double d : spec.durations) durations_json.push_back(jnum(d));
  const json params{{"speed_mps", jnum(spec.speed)},
                    {"beta", jnum(spec.speed / speed_of_light_si)},
                    {"lifetime_s", jnum(spec.lifetime)},
                    {"radii_m", radii_json},
                    {"durations_s", durations_json},
                    {"counts", spec.counts > 0 ? json(spec.counts) : json(nullptr)},
                    {"seed", spec.counts > 0 ? json(spec.seed) : json(nullptr)}};
  const json manifest = make_manifest("sweep", params);

  if (args.format == "json") {
    json rows = json::array();
    for (const SweepCell& cell : cells) {
      json row{{"radius_m", jnum(cell.radius_si)},
               {"duration_s", jnum(cell.duration_si)},
               {"omega_T_deg", jnum(cell.result.total_angle_deg)},
               {"survival_fraction", jnum(cell.result.survival_fraction)}};
      if (cell.result.counted) {
        row["counted"] = {{"total", cell.result.counted->total},
                          {"parallel", cell.result.counted->parallel},
                          {"estimated_angle_deg",
                           jnum(cell.result.counted->estimated_angle * degrees_per_radian)}};
      }
      rows.push_back(std::move(row));
    }
    const json doc{{"manifest", manifest}, {"rows", rows}};
    write_output(args.out, doc.dump(2) + "\n");
    return 0;
  }

  std::string csv = "radius_m,duration_s,omega_T_deg,survival_fraction\n";
  for (const SweepCell& cell : cells)
    csv += fmt9(cell.radius_si) + "," + fmt9(cell.duration_si) + "," +
           fmt9(cell.result.total_angle_deg) + "," + fmt9(cell.result.survival_fraction) +
           "\n";
  write_output(args.out, csv);
  write_manifest_sidecar(args.out, manifest);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner rotation toolkit: boost composition, velocity-space holonomy, "
               "and thermal-neutron ring predictions"};
  app.require_subcommand(1);

  const auto format_check = CLI::IsMember({"text", "csv", "json"});

  WignerAngleArgs wa;
  CLI::App* cmd_wa = app.add_subcommand("wigner-angle",
                                        "Decompose the composition of two boosts");
  cmd_wa->add_option("--v1", wa.v1, "First boost velocity, x,y,z")->required();
  cmd_wa->add_option("--v2", wa.v2, "Second boost velocity, x,y,z")->required();
  cmd_wa->add_option("--units", wa.units, "Velocity units")
      ->check(CLI::IsMember({"c", "mps"}));
  cmd_wa->add_option("--format", wa.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_wa->add_option("--out", wa.out, "Output file (default stdout)");

  OrbitArgs ob;
  CLI::App* cmd_ob = app.add_subcommand("orbit",
                                        "Discrete transport around a velocity-space circle");
  cmd_ob->add_option("--speed", ob.speed, "Orbit speed in units of c")->required();
  cmd_ob->add_option("--turns", ob.turns, "Number of revolutions");
  cmd_ob->add_option("--steps", ob.steps, "Steps per revolution");
  cmd_ob->add_option("--closure-tol", ob.closure_tol, "Closure residual tolerance");
  cmd_ob->add_option("--reproject-interval", ob.reproject_interval,
                     "Steps between group re-projections (0 disables)");
  cmd_ob->add_option("--stride", ob.stride, "Report every n-th step");
  cmd_ob->add_option("--format", ob.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_ob->add_option("--out", ob.out, "Output file (default stdout)");

  ExperimentArgs ex;
  CLI::App* cmd_ex = app.add_subcommand("experiment",
                                        "Ring-experiment prediction for one configuration");
  cmd_ex->add_option("--speed", ex.speed, "Neutron speed, m/s")->required();
  cmd_ex->add_option("--radius", ex.radius, "Orbit radius, m")->required();
  cmd_ex->add_option("--duration", ex.duration, "Storage time, s")->required();
  cmd_ex->add_option("--lifetime", ex.lifetime, "Mean lifetime, s");
  cmd_ex->add_option("--counts", ex.counts, "Shot-noise count budget (0 = exact)");
  cmd_ex->add_option("--seed", ex.seed, "Shot-noise generator seed");
  cmd_ex->add_option("--format", ex.format, "Output format")->check(format_check);
  cmd_ex->add_option("--out", ex.out, "Output file (default stdout)");

  SweepArgs sw;
  CLI::App* cmd_sw = app.add_subcommand("sweep", "Radius/duration grid of predictions");
  CLI::Option* opt_config = cmd_sw->add_option("--config", sw.config, "JSON config file");
  CLI::Option* opt_speed = cmd_sw->add_option("--speed", sw.speed, "Neutron speed, m/s");
  CLI::Option* opt_lifetime =
      cmd_sw->add_option("--lifetime", sw.lifetime, "Mean lifetime, s");
  CLI::Option* opt_rmin = cmd_sw->add_option("--radius-min", sw.radius_min, "Range min, m");
  CLI::Option* opt_rmax = cmd_sw->add_option("--radius-max", sw.radius_max, "Range max, m");
  CLI::Option* opt_rcount =
      cmd_sw->add_option("--radius-count", sw.radius_count, "Number of radii");
  CLI::Option* opt_rspace = cmd_sw->add_option("--radius-spacing", sw.radius_spacing,
                                               "Grid spacing")
                                ->check(CLI::IsMember({"log", "linear"}));
  CLI::Option* opt_radii =
      cmd_sw->add_option("--radii", sw.radii, "Explicit radii list, m (overrides range)");
  CLI::Option* opt_durations =
      cmd_sw->add_option("--durations", sw.durations, "Explicit durations list, s");
  CLI::Option* opt_multiples =
      cmd_sw->add_option("--multiples", sw.multiples, "Durations as lifetime multiples");
  CLI::Option* opt_counts =
      cmd_sw->add_option("--counts", sw.counts, "Shot-noise count budget (0 = exact)");
  CLI::Option* opt_seed = cmd_sw->add_option("--seed", sw.seed, "Shot-noise generator seed");
  cmd_sw->add_option("--format", sw.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_sw->add_option("--out", sw.out, "Output file (default stdout)");
  for (CLI::Option* opt : {opt_speed, opt_lifetime, opt_rmin, opt_rmax, opt_rcount,
                           opt_rspace, opt_radii, opt_durations, opt_multiples,
                           opt_counts, opt_seed})
    opt_config->excludes(opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_wa) return run_wigner_angle(wa);
    if (*cmd_ob) return run_orbit(ob);
    if (*cmd_ex) return run_experiment(ex);
    sw.explicit_range = cmd_sw->count("--radius-min") > 0 ||
                        cmd_sw->count("--radius-max") > 0 ||
                        cmd_sw->count("--radius-count") > 0 ||
                        cmd_sw->count("--radius-spacing") > 0;
    return run_sweep(sw);
  } catch (const numerical_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
