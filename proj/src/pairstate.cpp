#include "xxchain/pairstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xxchain {

namespace {

void check_region(int n, int k) {
  if (n < 1) throw std::invalid_argument("pairstate: n must be >= 1");
  if (k < 0 || k > n)
    throw std::invalid_argument("pairstate: region index k must be in 0.." +
                                std::to_string(n));
}

void check_site(int n, int l) {
  if (l < 1 || l > n)
    throw std::invalid_argument("pairstate: site must be in 1.." +
                                std::to_string(n));
}

}  // namespace

double one_tangle(const CorrelationKernel& kern, int l) {
  const double mz = magnetization(kern, l);
  return std::max(0.0, 1.0 - mz * mz);
}

double concurrence(const TwoSpinDensity& dens) {
  double ap = dens.a_plus;
  double am = dens.a_minus;
  if (ap < -1e-12 || am < -1e-12)
    throw std::domain_error(
        "concurrence: negative diagonal weight beyond tolerance");
  // |a| < 1e-12 is a rounding residue of an exact zero; the square root
  // would amplify it to ~1e-6 otherwise.
  ap = ap < 1e-12 ? 0.0 : ap;
  am = am < 1e-12 ? 0.0 : am;
  return 2.0 * std::max(0.0, std::abs(dens.e) - std::sqrt(ap * am));
}

double pair_concurrence(const CorrelationKernel& kern, int l, int m) {
  return concurrence(two_spin_density(kern, l, m));
}

int entanglement_range(int n, int k, int l, double threshold) {
  check_region(n, k);
  check_site(n, l);
  if (!(threshold > 0.0))
    throw std::invalid_argument("entanglement_range: threshold must be > 0");
  if (l + 1 > n)
    throw std::invalid_argument(
        "entanglement_range: needs a site right of l (l + 1 <= n)");
  const CorrelationKernel kern = kernel_matrix(n, k);
  int range = 0;
  for (int r = 1; l + r <= n; ++r)
    if (pair_concurrence(kern, l, l + r) > threshold) range = r;
  return range;
}

double region_midpoint(int n, int k) {
  check_region(n, k);
  const double hi =
      k == 0 ? 1.1 : std::cos(std::numbers::pi * k / (n + 1));
  const double lo =
      k == n ? -1.1 : std::cos(std::numbers::pi * (k + 1) / (n + 1));
  return 0.5 * (hi + lo);
}

std::vector<EntanglementPoint> measure_sweep(int n, int l, int m,
                                             Measure measure) {
  check_site(n, l);
  if (measure == Measure::concurrence) {
    check_site(n, m);
    if (m == l)
      throw std::invalid_argument("measure_sweep: concurrence needs m != l");
  } else {
    m = 0;
  }
  std::vector<EntanglementPoint> points;
  points.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    const CorrelationKernel kern = kernel_matrix(n, k);
    const double value = measure == Measure::tangle
                             ? one_tangle(kern, l)
                             : pair_concurrence(kern, l, m);
    points.push_back({region_midpoint(n, k), k, l, m, value});
  }
  return points;
}

}  // namespace xxchain
