#include "xxchain/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xxchain/fidelity.hpp"
#include "xxchain/kernel.hpp"
#include "xxchain/oracle.hpp"
#include "xxchain/pairstate.hpp"
#include "xxchain/spectrum.hpp"

namespace xxchain {

namespace {

struct Accumulator {
  double max_error = 0.0;
  std::size_t cases = 0;
  void add(double err) {
    max_error = std::max(max_error, std::abs(err));
    ++cases;
  }
};

// Fields strictly inside region k; the outer regions are capped at
// |B| = 1.1.
std::vector<double> region_fields(int n, int k, int cases) {
  const double hi = k == 0 ? 1.1 : std::cos(std::numbers::pi * k / (n + 1));
  const double lo =
      k == n ? -1.1 : std::cos(std::numbers::pi * (k + 1) / (n + 1));
  std::vector<double> out;
  out.reserve(cases);
  for (int i = 1; i <= cases; ++i)
    out.push_back(lo + (hi - lo) * i / (cases + 1.0));
  return out;
}

// Uhlmann fidelity of two symmetric 2x2 density matrices:
// F^2 = tr(rho sigma) + 2 sqrt(det rho det sigma).
double matrix_fidelity(const std::vector<double>& a,
                       const std::vector<double>& b) {
  const double tr = a[0] * b[0] + a[3] * b[3] + 2.0 * a[1] * b[1];
  const double da = std::max(0.0, a[0] * a[3] - a[1] * a[2]);
  const double db = std::max(0.0, b[0] * b[3] - b[1] * b[2]);
  return std::sqrt(std::max(0.0, tr + 2.0 * std::sqrt(da * db)));
}

}  // namespace

std::vector<CheckResult> run_validation(int n_max, int cases_per_region) {
  if (n_max < 2 || n_max > oracle::kMaxSites)
    throw std::invalid_argument("run_validation: n_max must be in 2.." +
                                std::to_string(oracle::kMaxSites));
  if (cases_per_region < 1)
    throw std::invalid_argument(
        "run_validation: cases_per_region must be >= 1");

  Accumulator residual, norm, mag, zzc, xxc, tangle, conc, dens, fid;

  for (int n = 2; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      const CorrelationKernel kern = kernel_matrix(n, k);
      for (double b : region_fields(n, k, cases_per_region)) {
        if (region_index({n, b}) != k)
          throw std::logic_error(
              "run_validation: sampled field left its region");
        residual.add(oracle::ground_residual(n, b));
        const oracle::StateVector psi = oracle::build_state(n, b);
        double norm2 = 0.0;
        for (double a : psi.amplitudes) norm2 += a * a;
        norm.add(norm2 - 1.0);
        for (int l = 1; l <= n; ++l) {
          const double z_or =
              oracle::oracle_corr(psi, oracle::Observable::z, {l});
          mag.add(magnetization(kern, l) - z_or);
          tangle.add(one_tangle(kern, l) - (1.0 - z_or * z_or));
        }
        for (int l = 1; l <= n; ++l)
          for (int m = l + 1; m <= n; ++m) {
            zzc.add(zz_corr(kern, l, m) -
                    oracle::oracle_corr(psi, oracle::Observable::zz, {l, m}));
            xxc.add(xx_corr(kern, l, m) -
                    oracle::oracle_corr(psi, oracle::Observable::xx, {l, m}));
            const std::vector<double> rho =
                oracle::reduced_density(psi, {l, m});
            const TwoSpinDensity an = two_spin_density(kern, l, m);
            dens.add(an.a_plus - rho[0]);
            dens.add(an.b_plus - rho[5]);
            dens.add(an.b_minus - rho[10]);
            dens.add(an.a_minus - rho[15]);
            dens.add(an.e - rho[6]);
            // the state family forces an X-shaped two-site matrix
            dens.add(rho[1]);
            dens.add(rho[2]);
            dens.add(rho[3]);
            dens.add(rho[7]);
            dens.add(rho[11]);
            const TwoSpinDensity from_oracle{rho[0], rho[15], rho[5], rho[10],
                                             rho[6]};
            conc.add(pair_concurrence(kern, l, m) - concurrence(from_oracle));
          }
      }
    }
    for (int k = 1; k <= n; ++k) {
      const double b_hi = region_fields(n, k - 1, 1)[0];
      const double b_lo = region_fields(n, k, 1)[0];
      const oracle::StateVector hi = oracle::build_state(n, b_hi);
      const oracle::StateVector lo = oracle::build_state(n, b_lo);
      for (int l = 1; l <= n; ++l) {
        const double f_or = matrix_fidelity(oracle::reduced_density(hi, {l}),
                                            oracle::reduced_density(lo, {l}));
        fid.add(coarse_fidelity(n, l, k) - f_or);
      }
    }
  }

  const auto make = [](const char* name, const Accumulator& acc, double tol) {
    return CheckResult{name, acc.cases, acc.max_error, tol,
                       acc.max_error <= tol};
  };
  return {
      make("ground_residual", residual, 1e-10),
      make("state_norm", norm, 1e-12),
      make("magnetization", mag, 1e-10),
      make("zz_corr", zzc, 1e-10),
      make("xx_corr", xxc, 1e-10),
      make("one_tangle", tangle, 1e-10),
      make("concurrence", conc, 1e-10),
      make("two_spin_density", dens, 1e-10),
      make("single_spin_fidelity", fid, 1e-10),
  };
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace xxchain
