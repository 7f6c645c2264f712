#include "xxchain/thermo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xxchain/kernel.hpp"
#include "xxchain/linalg.hpp"
#include "xxchain/pairstate.hpp"

namespace xxchain {

namespace {

constexpr int kMaxToeplitzOrder = 500;

void check_distance(int r, int min_r, const char* where) {
  if (r < min_r)
    throw std::invalid_argument(std::string(where) + ": distance r must be >= " +
                                std::to_string(min_r));
}

void check_finite_field(double b, const char* where) {
  if (!std::isfinite(b))
    throw std::invalid_argument(std::string(where) + ": b must be finite");
}

}  // namespace

BulkParams bulk_params(double b) {
  check_finite_field(b, "bulk_params");
  if (b < -1.0 || b > 1.0)
    throw std::invalid_argument("bulk_params: field b must be in [-1, 1]");
  return BulkParams{b, std::acos(b)};
}

double energy_per_spin(double b) {
  check_finite_field(b, "energy_per_spin");
  if (std::abs(b) > 1.0) return -std::abs(b);
  const double pi = std::numbers::pi;
  return (2.0 / pi) * (b * (std::acos(b) - pi / 2.0) - std::sqrt(1.0 - b * b));
}

double bulk_kernel(const BulkParams& params, int r) {
  check_distance(r, 0, "bulk_kernel");
  const double pi = std::numbers::pi;
  if (r == 0) return 2.0 * params.omega / pi;
  return (2.0 / pi) * std::sin(params.omega * r) / r;
}

double bulk_magnetization(double b) {
  check_finite_field(b, "bulk_magnetization");
  if (b > 1.0) return 1.0;
  if (b < -1.0) return -1.0;
  return 1.0 - 2.0 * std::acos(b) / std::numbers::pi;
}

double bulk_zz(const BulkParams& params, int r) {
  check_distance(r, 1, "bulk_zz");
  const double mz = bulk_magnetization(params.b);
  const double g = bulk_kernel(params, r);
  return mz * mz - g * g;
}

double bulk_xx(const BulkParams& params, int r) {
  check_distance(r, 1, "bulk_xx");
  if (r > kMaxToeplitzOrder)
    throw std::length_error("bulk_xx: r must be <= " +
                            std::to_string(kMaxToeplitzOrder));
  std::vector<double> symbol(r + 1);
  for (int s = 0; s <= r; ++s) symbol[s] = bulk_kernel(params, s);
  // Same row/column offset as the finite-size determinant:
  // entry (a, b) = g(|b - a + 1|) - [b - a + 1 == 0].
  std::vector<double> mat(static_cast<std::size_t>(r) * r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      const int s = b - a + 1;
      mat[static_cast<std::size_t>(a) * r + b] =
          symbol[std::abs(s)] - (s == 0 ? 1.0 : 0.0);
    }
  return lu_determinant(std::move(mat), r);
}

double bulk_xx_product_b0(int r) {
  check_distance(r, 1, "bulk_xx_product_b0");
  double value = std::pow(2.0 / std::numbers::pi, r);
  // Strict-ceiling upper limit: the last factor index is
  // ceil_strict(r/2) - 1 = floor(r/2); for even r its exponent is 0.
  for (int j = 1; j <= r / 2; ++j) {
    const double base = 4.0 * j * j / (4.0 * j * j - 1.0);
    value *= std::pow(base, r - 2 * j);
  }
  return value;
}

double xx_asymptote(int r) {
  check_distance(r, 1, "xx_asymptote");
  const double amp = kXxAsymptoteAmplitude;
  return std::numbers::sqrt2 * amp * amp / std::sqrt(static_cast<double>(r));
}

double bulk_concurrence(const BulkParams& params, int r) {
  check_distance(r, 1, "bulk_concurrence");
  const double mz = bulk_magnetization(params.b);
  const double zz = bulk_zz(params, r);
  const double xx = bulk_xx(params, r);
  const TwoSpinDensity dens{0.25 * (1.0 + 2.0 * mz + zz),
                            0.25 * (1.0 - 2.0 * mz + zz),
                            0.25 * (1.0 - zz), 0.25 * (1.0 - zz), 0.5 * xx};
  return concurrence(dens);
}

double k_fraction(double b) {
  check_finite_field(b, "k_fraction");
  if (b < -1.0 || b > 1.0)
    throw std::invalid_argument("k_fraction: field b must be in [-1, 1]");
  return std::acos(b) / std::numbers::pi;
}

}  // namespace xxchain
