#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wigner/holonomy.hpp"
#include "wigner/lorentz.hpp"
#include "wigner/spinor.hpp"

using namespace wigner;

namespace {

std::vector<Velocity3> sample_velocities(std::size_t count) {
  std::mt19937_64 rng(0xbe9c);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> mag(0.0, 0.9);
  std::vector<Velocity3> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Vec3 dir{gauss(rng), gauss(rng), gauss(rng)};
    out.push_back(velocity_from(mag(rng) * normalized(dir)));
  }
  return out;
}

void bm_boost_from_velocity(benchmark::State& state) {
  const auto vs = sample_velocities(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(boost_from_velocity(vs[i++ & 255]));
  }
}
BENCHMARK(bm_boost_from_velocity);

void bm_compose_4x4(benchmark::State& state) {
  const auto vs = sample_velocities(256);
  std::vector<LorentzTransform> ts;
  for (const Velocity3& v : vs) ts.push_back(boost_from_velocity(v));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(ts[i & 255], ts[(i + 1) & 255]));
    ++i;
  }
}
BENCHMARK(bm_compose_4x4);

void bm_compose_spinor(benchmark::State& state) {
  const auto vs = sample_velocities(256);
  std::vector<SpinorTransform> ts;
  for (const Velocity3& v : vs) ts.push_back(spinor_boost_from_velocity(v));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(ts[i & 255], ts[(i + 1) & 255]));
    ++i;
  }
}
BENCHMARK(bm_compose_spinor);

void bm_decompose_boost_rotation(benchmark::State& state) {
  const auto vs = sample_velocities(256);
  std::vector<LorentzTransform> ts;
  for (std::size_t i = 0; i < 256; ++i)
    ts.push_back(compose(boost_from_velocity(vs[i]),
                         boost_from_velocity(vs[(i + 1) & 255])));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_boost_rotation(ts[i++ & 255]));
  }
}
BENCHMARK(bm_decompose_boost_rotation);

void bm_wigner_angle_two_boosts(benchmark::State& state) {
  const auto vs = sample_velocities(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wigner_angle_two_boosts(vs[i & 255], vs[(i + 1) & 255]));
    ++i;
  }
}
BENCHMARK(bm_wigner_angle_two_boosts);

void bm_wigner_angle_circle(benchmark::State& state) {
  double beta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner_angle_circle(beta));
    beta = beta < 0.9 ? beta + 1e-6 : 0.1;
  }
}
BENCHMARK(bm_wigner_angle_circle);

void bm_holonomy_area_integral(benchmark::State& state) {
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(holonomy_area_integral(0.5, points));
  }
}
BENCHMARK(bm_holonomy_area_integral)->Arg(256)->Arg(4096);

void bm_transport_loop(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(transport_loop({0.5, 1, steps}));
  }
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(bm_transport_loop)->Arg(1024)->Arg(16384)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
