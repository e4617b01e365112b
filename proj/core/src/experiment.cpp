#include "wigner/experiment.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace wigner {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Deterministic per-cell seed derivation for sweeps.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

double survival_fraction(double duration_si, double lifetime_si) {
  if (!(duration_si > 0.0)) {
    throw std::domain_error("duration must be positive");
  }
  if (!(lifetime_si > 0.0)) {
    throw std::domain_error("lifetime must be positive");
  }
  return std::exp(-duration_si / lifetime_si);
}

ExperimentResult total_wigner_rotation(const ExperimentConfig& cfg) {
  if (!(cfg.speed_si > 0.0) || cfg.speed_si >= speed_of_light_si) {
    throw std::domain_error("speed must lie in (0, c)");
  }
  if (!(cfg.radius_si > 0.0)) {
    throw std::domain_error("radius must be positive");
  }

  const double beta = cfg.speed_si / speed_of_light_si;

  ExperimentResult r;
  r.angle_per_revolution = wigner_angle_circle(beta);
  r.revolutions = cfg.speed_si * cfg.duration_si / (kTwoPi * cfg.radius_si);
  r.total_angle_rad = r.revolutions * r.angle_per_revolution;
  r.total_angle_deg = r.total_angle_rad * degrees_per_radian;
  r.survival_fraction = survival_fraction(cfg.duration_si, cfg.lifetime_si);

  const SpinorTransform u =
      rotation_operator(r.total_angle_rad, Vec3{0.0, 0.0, 1.0});
  r.final_spin = apply_rotation(cfg.initial_spin, u);
  r.measured_angle_deg =
      measured_rotation_angle(cfg.initial_spin, r.final_spin) *
      degrees_per_radian;

  if (cfg.shot_noise) {
    const double surviving =
        static_cast<double>(cfg.shot_noise->counts) * r.survival_fraction;
    const auto effective = static_cast<std::int64_t>(std::llround(surviving));
    if (effective < 1) {
      throw std::domain_error("count budget leaves no surviving neutrons");
    }
    std::mt19937_64 rng(cfg.shot_noise->seed);
    r.counted =
        measure_with_counts(cfg.initial_spin, r.final_spin, effective, rng);
  }
  return r;
}

std::vector<SweepCell> sweep_radius(const ExperimentConfig& base,
                                    const std::vector<double>& radii_si,
                                    const std::vector<double>& durations_si) {
  if (radii_si.empty() || durations_si.empty()) {
    throw std::invalid_argument("sweep grid must be non-empty");
  }

  std::vector<SweepCell> cells;
  cells.reserve(radii_si.size() * durations_si.size());
  std::uint64_t index = 0;
  for (const double duration : durations_si) {
    for (const double radius : radii_si) {
      ExperimentConfig cfg = base;
      cfg.radius_si = radius;
      cfg.duration_si = duration;
      if (cfg.shot_noise) {
        cfg.shot_noise->seed = splitmix64(base.shot_noise->seed + index);
      }
      cells.push_back(SweepCell{radius, duration, total_wigner_rotation(cfg)});
      ++index;
    }
  }
  return cells;
}

}  // namespace wigner
