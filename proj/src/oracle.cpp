#include "xxchain/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "xxchain/linalg.hpp"
#include "xxchain/spectrum.hpp"

namespace xxchain::oracle {

namespace {

void check_sites(int n, const std::vector<int>& sites, std::size_t count) {
  if (sites.size() != count)
    throw std::invalid_argument("oracle: expected " + std::to_string(count) +
                                " site index(es)");
  for (int l : sites)
    if (l < 1 || l > n)
      throw std::invalid_argument("oracle: site must be in 1.." +
                                  std::to_string(n));
  if (count == 2 && sites[0] == sites[1])
    throw std::invalid_argument("oracle: sites must be distinct");
}

void check_state(const StateVector& psi) {
  if (psi.n < 1 || psi.n > kMaxSites ||
      psi.amplitudes.size() != (std::size_t{1} << psi.n))
    throw std::invalid_argument("oracle: malformed state vector");
}

}  // namespace

double slater_amplitude(int n, int k, const std::vector<int>& sites) {
  if (n < 1) throw std::invalid_argument("slater_amplitude: n must be >= 1");
  if (k < 0 || k > n)
    throw std::invalid_argument("slater_amplitude: k must be in 0.." +
                                std::to_string(n));
  if (static_cast<int>(sites.size()) != k)
    throw std::invalid_argument("slater_amplitude: need exactly k sites");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (sites[i] < 1 || sites[i] > n)
      throw std::invalid_argument("slater_amplitude: site must be in 1.." +
                                  std::to_string(n));
    if (i > 0 && sites[i] <= sites[i - 1])
      throw std::invalid_argument(
          "slater_amplitude: sites must be strictly increasing");
  }
  if (k == 0) return 1.0;
  std::vector<double> mat(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      mat[static_cast<std::size_t>(i) * k + j] =
          sine_amplitude(n, j + 1, sites[i]);
  return lu_determinant(std::move(mat), k);
}

StateVector build_state(int n, double b) {
  if (n < 1) throw std::invalid_argument("build_state: n must be >= 1");
  if (n > kMaxSites)
    throw std::length_error("build_state: n must be <= " +
                            std::to_string(kMaxSites));
  const int k = region_index({n, b});
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> amps(dim, 0.0);
  if (k == 0) {
    amps[0] = 1.0;
  } else {
    std::vector<int> sites(k);
    for (int i = 0; i < k; ++i) sites[i] = i + 1;
    while (true) {
      std::size_t idx = 0;
      for (int s : sites) idx |= std::size_t{1} << (s - 1);
      amps[idx] = slater_amplitude(n, k, sites);
      int i = k - 1;
      while (i >= 0 && sites[i] == n - (k - 1 - i)) --i;
      if (i < 0) break;
      ++sites[i];
      for (int j = i + 1; j < k; ++j) sites[j] = sites[j - 1] + 1;
    }
  }
  double norm2 = 0.0;
  for (double a : amps) norm2 += a * a;
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& a : amps) a *= inv;
  for (double a : amps) {
    if (std::abs(a) > 1e-12) {
      if (a < 0.0)
        for (double& v : amps) v = -v;
      break;
    }
  }
  return StateVector{n, std::move(amps)};
}

std::vector<double> apply_hamiltonian(int n, double b,
                                      const StateVector& psi) {
  check_state(psi);
  if (psi.n != n)
    throw std::invalid_argument("apply_hamiltonian: state has wrong n");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> out(dim, 0.0);
  for (std::size_t c = 0; c < dim; ++c) {
    const double amp = psi.amplitudes[c];
    if (amp == 0.0) continue;
    const int flips = std::popcount(c);
    out[c] += -b * (n - 2.0 * flips) * amp;
    for (int i = 0; i + 1 < n; ++i) {
      const std::size_t mask =
          (std::size_t{1} << i) | (std::size_t{1} << (i + 1));
      const std::size_t pair = c & mask;
      if (pair != 0 && pair != mask) out[c ^ mask] += -amp;
    }
  }
  return out;
}

double ground_residual(int n, double b) {
  const StateVector psi = build_state(n, b);
  const double energy = ground_energy({n, b});
  const std::vector<double> h = apply_hamiltonian(n, b, psi);
  double sum = 0.0;
  for (std::size_t c = 0; c < h.size(); ++c) {
    const double r = h[c] - energy * psi.amplitudes[c];
    sum += r * r;
  }
  return std::sqrt(sum);
}

std::vector<double> reduced_density(const StateVector& psi,
                                    const std::vector<int>& sites) {
  check_state(psi);
  if (sites.size() != 1 && sites.size() != 2)
    throw std::invalid_argument("reduced_density: expects 1 or 2 sites");
  check_sites(psi.n, sites, sites.size());
  const std::size_t dim = std::size_t{1} << psi.n;
  if (sites.size() == 1) {
    const std::size_t bit = std::size_t{1} << (sites[0] - 1);
    double up2 = 0.0, dn2 = 0.0, cross = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
      if (c & bit) continue;
      const double up = psi.amplitudes[c];
      const double dn = psi.amplitudes[c | bit];
      up2 += up * up;
      dn2 += dn * dn;
      cross += up * dn;
    }
    return {up2, cross, cross, dn2};
  }
  const std::size_t bl = std::size_t{1} << (sites[0] - 1);
  const std::size_t bm = std::size_t{1} << (sites[1] - 1);
  std::vector<double> rho(16, 0.0);
  for (std::size_t c = 0; c < dim; ++c) {
    if (c & (bl | bm)) continue;
    const std::size_t idx[4] = {c, c | bm, c | bl, c | bl | bm};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        rho[static_cast<std::size_t>(i) * 4 + j] +=
            psi.amplitudes[idx[i]] * psi.amplitudes[idx[j]];
  }
  return rho;
}

double oracle_corr(const StateVector& psi, Observable kind,
                   const std::vector<int>& sites) {
  check_state(psi);
  const std::size_t dim = std::size_t{1} << psi.n;
  if (kind == Observable::z) {
    check_sites(psi.n, sites, 1);
    const std::size_t bit = std::size_t{1} << (sites[0] - 1);
    double sum = 0.0;
    for (std::size_t c = 0; c < dim; ++c)
      sum += psi.amplitudes[c] * psi.amplitudes[c] * ((c & bit) ? -1.0 : 1.0);
    return sum;
  }
  check_sites(psi.n, sites, 2);
  const std::size_t bl = std::size_t{1} << (sites[0] - 1);
  const std::size_t bm = std::size_t{1} << (sites[1] - 1);
  double sum = 0.0;
  if (kind == Observable::zz) {
    for (std::size_t c = 0; c < dim; ++c)
      sum += psi.amplitudes[c] * psi.amplitudes[c] *
             ((c & bl) ? -1.0 : 1.0) * ((c & bm) ? -1.0 : 1.0);
    return sum;
  }
  for (std::size_t c = 0; c < dim; ++c)
    sum += psi.amplitudes[c] * psi.amplitudes[c ^ (bl | bm)];
  return sum;
}

}  // namespace xxchain::oracle
