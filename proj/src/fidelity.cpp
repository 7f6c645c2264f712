#include "xxchain/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "xxchain/spectrum.hpp"

namespace xxchain {

double spin_up_probability(int n, int k, int l) {
  if (n < 1)
    throw std::invalid_argument("spin_up_probability: n must be >= 1");
  if (k < 0 || k > n)
    throw std::invalid_argument(
        "spin_up_probability: region index k must be in 0.." +
        std::to_string(n));
  double sum = 0.0;
  for (int r = 1; r <= k; ++r) {
    const double s = sine_amplitude(n, r, l);
    sum += s * s;
  }
  const double p = std::clamp(1.0 - sum, 0.0, 1.0);
  // Occupancies within 1e-12 of the boundary are summation residues of
  // exact 0/1 (mode orthonormality); genuine occupancies stay far above
  // this for any supported chain length.
  if (p < 1e-12) return 0.0;
  if (p > 1.0 - 1e-12) return 1.0;
  return p;
}

double single_spin_fidelity(double p_up, double q_up) {
  if (p_up < -1e-12 || p_up > 1.0 + 1e-12 || q_up < -1e-12 ||
      q_up > 1.0 + 1e-12)
    throw std::invalid_argument(
        "single_spin_fidelity: probabilities must lie in [0, 1]");
  const double p = std::clamp(p_up, 0.0, 1.0);
  const double q = std::clamp(q_up, 0.0, 1.0);
  if (p == q) return 1.0;
  return std::sqrt(p * q) + std::sqrt((1.0 - p) * (1.0 - q));
}

double coarse_fidelity(int n, int l, int k) {
  if (k < 1 || k > n)
    throw std::invalid_argument("coarse_fidelity: crossing index k must be in 1.." +
                                std::to_string(n));
  return single_spin_fidelity(spin_up_probability(n, k - 1, l),
                              spin_up_probability(n, k, l));
}

double fidelity_susceptibility(int n, int l, int k) {
  if (k < 2 || k > n)
    throw std::invalid_argument(
        "fidelity_susceptibility: needs crossing spacing on both sides "
        "(k in 2.." +
        std::to_string(n) + ")");
  const double fid = coarse_fidelity(n, l, k);
  if (fid == 0.0) return std::numeric_limits<double>::infinity();
  const auto fields = crossing_fields(n);
  const double db = fields[k - 2] - fields[k - 1];
  return -2.0 * std::log(fid) / (db * db);
}

std::vector<FidelityPoint> fidelity_sweep(int n, int l) {
  const auto fields = crossing_fields(n);
  if (l < 1 || l > n)
    throw std::invalid_argument("fidelity_sweep: site must be in 1.." +
                                std::to_string(n));
  std::vector<FidelityPoint> points;
  points.reserve(n);
  for (int k = 1; k <= n; ++k) {
    const double fid = coarse_fidelity(n, l, k);
    double chi;
    if (k >= 2) {
      chi = fidelity_susceptibility(n, l, k);
    } else {
      const double db = n >= 2 ? fields[0] - fields[1] : 1.0 - fields[0];
      chi = fid == 0.0 ? std::numeric_limits<double>::infinity()
                       : -2.0 * std::log(fid) / (db * db);
    }
    points.push_back({k, fields[k - 1], fid, chi});
  }
  return points;
}

}  // namespace xxchain
