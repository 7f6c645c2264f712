#pragma once

#include <cstddef>
#include <vector>

// Two-point fermion kernel and the spin correlators built from it.
//
//   g_{l,m} = 2 sum_{r=1}^{k} S_l^r S_m^r
//
// g/2 is the rank-k projector onto the emptied sine modes, so
// trace(g) = 2k and (g/2)^2 = g/2. Spin observables reduce to g:
//
//   <sigma^z_l>            = 1 - g_{l,l}
//   <sigma^z_l sigma^z_m>  = (1 - g_{l,l})(1 - g_{m,m}) - g_{l,m}^2
//   <sigma^x_l sigma^x_m>  = det M,  M_{ij} = g_{i,j} - delta_{i,j}
//                            over rows i = l..m-1, columns j = l+1..m.
namespace xxchain {

// Kernel matrix for a chain of n sites after k crossings. Immutable
// after construction; safe to share across threads.
struct CorrelationKernel {
  int n = 0;
  int k = 0;
  std::vector<double> g;  // row-major n x n, symmetric

  // 1-based site indices, no bounds check.
  double operator()(int l, int m) const {
    return g[static_cast<std::size_t>(l - 1) * n + (m - 1)];
  }
};

// Two-site reduced density matrix. Diagonal weights over
// {up-up, down-down, up-down, down-up} plus the single coherence e
// between up-down and down-up.
struct TwoSpinDensity {
  double a_plus = 0.0;
  double a_minus = 0.0;
  double b_plus = 0.0;
  double b_minus = 0.0;
  double e = 0.0;
};

// g_{l,m}. Direct summation on the diagonal and for near-degenerate
// cos(pi l/(n+1)) vs cos(pi m/(n+1)); Christoffel-Darboux closed form
// otherwise.
double kernel_entry(int n, int k, int l, int m);

CorrelationKernel kernel_matrix(int n, int k);

double magnetization(const CorrelationKernel& kern, int l);

// <sigma^z_l sigma^z_m>, l != m.
double zz_corr(const CorrelationKernel& kern, int l, int m);

// <sigma^x_l sigma^x_m> as the (m-l)x(m-l) determinant above, l < m.
double xx_corr(const CorrelationKernel& kern, int l, int m);

TwoSpinDensity two_spin_density(const CorrelationKernel& kern, int l, int m);

// Mean nearest-neighbor kink density, (1 - <sigma^z_l sigma^z_{l+1}>)/2
// averaged over bonds.
double domain_wall_density(const CorrelationKernel& kern);

}  // namespace xxchain
