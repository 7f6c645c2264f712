#pragma once

#include <vector>

// Brute-force ground truth on the full 2^n spin basis (n <= 14). The
// ground state is assembled from Slater determinants of sine-mode
// amplitudes, certified by the Hamiltonian residual, and measured by
// direct operator application. Everything is real in this basis.
namespace xxchain::oracle {

inline constexpr int kMaxSites = 14;

// Real amplitudes over sigma^z product states. Bit l-1 of the
// configuration index set means spin l is flipped down.
struct StateVector {
  int n = 0;
  std::vector<double> amplitudes;  // length 2^n, unit norm
};

enum class Observable { z, zz, xx };

// det[S_{l_i}^j], i,j = 1..k, for strictly increasing sites; 1 for k = 0.
double slater_amplitude(int n, int k, const std::vector<int>& sites);

// Ground state at field b, normalized, with the first nonzero amplitude
// (in configuration-index order) made non-negative.
StateVector build_state(int n, double b);

// H psi, configuration by configuration: flip-flop element -1 between
// neighbor configurations, diagonal -b (n - 2 popcount).
std::vector<double> apply_hamiltonian(int n, double b, const StateVector& psi);

// || H psi - E_g psi ||_2 for the analytic ground state and energy.
double ground_residual(int n, double b);

// Partial trace onto 1 or 2 sites; row-major 2x2 or 4x4 with basis
// index 2*(site_1 down) + (site_2 down).
std::vector<double> reduced_density(const StateVector& psi,
                                    const std::vector<int>& sites);

// <psi| O |psi> for O in {sigma^z_l, sigma^z_l sigma^z_m,
// sigma^x_l sigma^x_m}.
double oracle_corr(const StateVector& psi, Observable kind,
                   const std::vector<int>& sites);

}  // namespace xxchain::oracle
