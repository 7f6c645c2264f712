#pragma once

#include <cstdint>
#include <vector>

// Free-fermion solution of the open spin-1/2 XX chain in a transverse
// field,
//
//   H = -[ sum_l (sigma^x_l sigma^x_{l+1} + sigma^y_l sigma^y_{l+1})/2
//          + B sum_l sigma^z_l ],
//
// with the exchange constant as the energy unit. The sine modes
// S_l^k = sqrt(2/(N+1)) sin(pi k l / (N+1)) diagonalize H with
// single-mode energies Lambda_k = -2B + 2 cos(pi k / (N+1)). Mode k
// empties when B drops below the crossing field B_k = cos(pi k / (N+1));
// the region index k counts the crossings passed coming from large B.
//
// Error conventions used across the library: std::invalid_argument for
// out-of-range indices and parameters, std::domain_error for physically
// invalid state data, std::length_error for resource caps.
namespace xxchain {

// Chain of n sites in a dimensionless transverse field b.
struct ChainSpec {
  int n = 1;
  double b = 0.0;
};

// Ground-state mode occupations after k crossings: modes 1..k empty,
// modes k+1..n occupied.
struct GroundStateData {
  int n = 0;
  int k = 0;
  std::vector<std::uint8_t> occupation;  // mode m (1-based) at occupation[m-1]
};

// S_l^k for mode k in 1..n+1 and site l in 1..n. k = n+1 is allowed (it
// evaluates to 0) because the kernel closed form needs it.
double sine_amplitude(int n, int k, int l);

// Lambda_k = -2b + 2 cos(pi k / (n+1)), k in 1..n.
double mode_energy(const ChainSpec& spec, int k);

// The strictly decreasing crossing fields [B_1, ..., B_n].
std::vector<double> crossing_fields(int n);

// Number of crossings passed: |{k : B_k > b}|. Plain IEEE comparison;
// at b = B_k exactly, the higher-field region k-1 is reported.
int region_index(const ChainSpec& spec);

GroundStateData ground_state(const ChainSpec& spec);

// Ground-branch energy after k crossings:
// -(n - 2k) b - 2 sum_{l<=k} cos(pi l / (n+1)), valid for k in 0..n.
double ground_energy_at(const ChainSpec& spec, int k);

// Lower envelope of the branch family, i.e. ground_energy_at at the
// region index of b.
double ground_energy(const ChainSpec& spec);

}  // namespace xxchain
