#pragma once

#include <vector>

// Partial-state fidelity of a single spin between ground states on the
// two sides of a level crossing. Single-spin reduced states are
// diagonal, so the trace-norm fidelity collapses to the Bhattacharyya
// sum sqrt(p q) + sqrt((1-p)(1-q)). The coarse-grained susceptibility
// lives on the crossing lattice with spacing dB = B_{k-1} - B_k.
namespace xxchain {

struct FidelityPoint {
  int k = 0;
  double b_k = 0.0;
  double fid = 1.0;
  double chi = 0.0;
};

// p(up) of site l in region k: 1 - sum_{r<=k} (S_l^r)^2, clamped to [0,1].
double spin_up_probability(int n, int k, int l);

// Bhattacharyya fidelity of two diagonal qubit states; exactly 1 iff
// p_up == q_up. Inputs outside [0,1] by more than 1e-12 are rejected,
// smaller excursions are clamped.
double single_spin_fidelity(double p_up, double q_up);

// Fidelity of site l across crossing k (regions k-1 vs k), k in 1..n.
double coarse_fidelity(int n, int l, int k);

// -2 ln F / (B_{k-1} - B_k)^2 for k in 2..n; +inf when F = 0.
double fidelity_susceptibility(int n, int l, int k);

// Points for k = 1..n in descending-field order. chi at k = 1 uses the
// spacing B_1 - B_2 (the nearest available crossing spacing).
std::vector<FidelityPoint> fidelity_sweep(int n, int l);

}  // namespace xxchain
