#include "xxchain/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xxchain {

namespace {

void check_spec(const ChainSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("ChainSpec: n must be >= 1");
  if (!std::isfinite(spec.b))
    throw std::invalid_argument("ChainSpec: b must be finite");
}

}  // namespace

double sine_amplitude(int n, int k, int l) {
  if (n < 1) throw std::invalid_argument("sine_amplitude: n must be >= 1");
  if (k < 1 || k > n + 1)
    throw std::invalid_argument("sine_amplitude: mode index k must be in 1.." +
                                std::to_string(n + 1));
  if (l < 1 || l > n)
    throw std::invalid_argument("sine_amplitude: site index l must be in 1.." +
                                std::to_string(n));
  return std::sqrt(2.0 / (n + 1)) *
         std::sin(std::numbers::pi * k * l / (n + 1));
}

double mode_energy(const ChainSpec& spec, int k) {
  check_spec(spec);
  if (k < 1 || k > spec.n)
    throw std::invalid_argument("mode_energy: mode index k must be in 1.." +
                                std::to_string(spec.n));
  return -2.0 * spec.b + 2.0 * std::cos(std::numbers::pi * k / (spec.n + 1));
}

std::vector<double> crossing_fields(int n) {
  if (n < 1) throw std::invalid_argument("crossing_fields: n must be >= 1");
  std::vector<double> fields(n);
  for (int k = 1; k <= n; ++k)
    fields[k - 1] = std::cos(std::numbers::pi * k / (n + 1));
  return fields;
}

int region_index(const ChainSpec& spec) {
  check_spec(spec);
  int count = 0;
  for (int k = 1; k <= spec.n; ++k)
    if (std::cos(std::numbers::pi * k / (spec.n + 1)) > spec.b) ++count;
  return count;
}

GroundStateData ground_state(const ChainSpec& spec) {
  const int k = region_index(spec);
  GroundStateData state{spec.n, k, std::vector<std::uint8_t>(spec.n, 0)};
  for (int m = k + 1; m <= spec.n; ++m) state.occupation[m - 1] = 1;
  return state;
}

double ground_energy_at(const ChainSpec& spec, int k) {
  check_spec(spec);
  if (k < 0 || k > spec.n)
    throw std::invalid_argument("ground_energy_at: k must be in 0.." +
                                std::to_string(spec.n));
  double sum = 0.0;
  for (int l = 1; l <= k; ++l)
    sum += std::cos(std::numbers::pi * l / (spec.n + 1));
  return -(spec.n - 2.0 * k) * spec.b - 2.0 * sum;
}

double ground_energy(const ChainSpec& spec) {
  return ground_energy_at(spec, region_index(spec));
}

}  // namespace xxchain
