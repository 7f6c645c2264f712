#include "xxchain/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "xxchain/linalg.hpp"
#include "xxchain/spectrum.hpp"

namespace xxchain {

namespace {

// Below this cos spacing the closed-form denominator is unreliable and
// the O(k) direct sum takes over.
constexpr double kDegenerateCos = 1e-8;

void check_region(int n, int k) {
  if (n < 1) throw std::invalid_argument("kernel: n must be >= 1");
  if (k < 0 || k > n)
    throw std::invalid_argument("kernel: region index k must be in 0.." +
                                std::to_string(n));
}

void check_site(int n, int l, const char* name) {
  if (l < 1 || l > n)
    throw std::invalid_argument(std::string("kernel: site ") + name +
                                " must be in 1.." + std::to_string(n));
}

}  // namespace

double kernel_entry(int n, int k, int l, int m) {
  check_region(n, k);
  check_site(n, l, "l");
  check_site(n, m, "m");
  if (k == 0) return 0.0;
  const double cl = std::cos(std::numbers::pi * l / (n + 1));
  const double cm = std::cos(std::numbers::pi * m / (n + 1));
  if (l == m || std::abs(cl - cm) < kDegenerateCos) {
    double sum = 0.0;
    for (int r = 1; r <= k; ++r)
      sum += sine_amplitude(n, r, l) * sine_amplitude(n, r, m);
    return 2.0 * sum;
  }
  const double num = sine_amplitude(n, k + 1, l) * sine_amplitude(n, k, m) -
                     sine_amplitude(n, k, l) * sine_amplitude(n, k + 1, m);
  return num / (cl - cm);
}

CorrelationKernel kernel_matrix(int n, int k) {
  check_region(n, k);
  CorrelationKernel kern{
      n, k, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  for (int l = 1; l <= n; ++l)
    for (int m = l; m <= n; ++m) {
      const double value = kernel_entry(n, k, l, m);
      kern.g[static_cast<std::size_t>(l - 1) * n + (m - 1)] = value;
      kern.g[static_cast<std::size_t>(m - 1) * n + (l - 1)] = value;
    }
  return kern;
}

double magnetization(const CorrelationKernel& kern, int l) {
  check_site(kern.n, l, "l");
  return 1.0 - kern(l, l);
}

double zz_corr(const CorrelationKernel& kern, int l, int m) {
  check_site(kern.n, l, "l");
  check_site(kern.n, m, "m");
  if (l == m) throw std::invalid_argument("zz_corr: requires l != m");
  return (1.0 - kern(l, l)) * (1.0 - kern(m, m)) - kern(l, m) * kern(l, m);
}

double xx_corr(const CorrelationKernel& kern, int l, int m) {
  check_site(kern.n, l, "l");
  check_site(kern.n, m, "m");
  if (l >= m) throw std::invalid_argument("xx_corr: requires l < m");
  const int r = m - l;
  std::vector<double> mat(static_cast<std::size_t>(r) * r);
  for (int a = 0; a < r; ++a) {
    const int i = l + a;  // row site l..m-1
    for (int b = 0; b < r; ++b) {
      const int j = l + 1 + b;  // column site l+1..m
      mat[static_cast<std::size_t>(a) * r + b] =
          kern(i, j) - (i == j ? 1.0 : 0.0);
    }
  }
  return lu_determinant(std::move(mat), r);
}

TwoSpinDensity two_spin_density(const CorrelationKernel& kern, int l, int m) {
  check_site(kern.n, l, "l");
  check_site(kern.n, m, "m");
  if (l == m) throw std::invalid_argument("two_spin_density: requires l != m");
  const double zl = magnetization(kern, l);
  const double zm = magnetization(kern, m);
  const double zz = zz_corr(kern, l, m);
  const double xx = l < m ? xx_corr(kern, l, m) : xx_corr(kern, m, l);
  return TwoSpinDensity{0.25 * (1.0 + zl + zm + zz),
                        0.25 * (1.0 - zl - zm + zz),
                        0.25 * (1.0 + zl - zm - zz),
                        0.25 * (1.0 - zl + zm - zz), 0.5 * xx};
}

double domain_wall_density(const CorrelationKernel& kern) {
  if (kern.n < 2)
    throw std::invalid_argument("domain_wall_density: requires n >= 2");
  double sum = 0.0;
  for (int l = 1; l < kern.n; ++l)
    sum += 0.5 * (1.0 - zz_corr(kern, l, l + 1));
  return sum / (kern.n - 1);
}

}  // namespace xxchain
