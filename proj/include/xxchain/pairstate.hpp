#pragma once

#include <vector>

#include "xxchain/kernel.hpp"

// Entanglement measures of the chain ground state: the one-tangle
// tau_l = 1 - <sigma^z_l>^2 and the two-site concurrence
// C_{l,m} = 2 max{0, |e| - sqrt(a_+ a_-)}. Both are piecewise constant
// in the field, jumping only at the crossing fields.
namespace xxchain {

enum class Measure { tangle, concurrence };

struct EntanglementPoint {
  double b = 0.0;  // region midpoint field
  int k = 0;       // region index
  int l = 0;
  int m = 0;       // 0 for one-site measures
  double value = 0.0;
};

double one_tangle(const CorrelationKernel& kern, int l);

double concurrence(const TwoSpinDensity& dens);

// Concurrence between sites l and m of the given kernel's state.
double pair_concurrence(const CorrelationKernel& kern, int l, int m);

// Largest r with C_{l,l+r} > threshold in region k; 0 if none.
int entanglement_range(int n, int k, int l, double threshold);

// Midpoint field of region k, with the outer regions capped at
// B = +/- 1.1.
double region_midpoint(int n, int k);

// One point per region k = 0..n, evaluated at region midpoints and
// ordered by k ascending (descending field). m is ignored for the
// tangle and must name a second site for the concurrence.
std::vector<EntanglementPoint> measure_sweep(int n, int l, int m,
                                             Measure measure);

}  // namespace xxchain
