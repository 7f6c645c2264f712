#pragma once

// Thermodynamic-limit closed forms. Inside the critical window |b| <= 1
// the band angle is omega = arccos(b) and the bulk kernel becomes
// g(r) = (2/pi) sin(omega r)/r (g(0) = 2 omega/pi); the transverse
// correlator is the r x r Toeplitz determinant with the same row/column
// offset as the finite-size case. At b = 0 it also has the product
// closed form (2/pi)^r prod_j (4j^2/(4j^2-1))^(r-2j) and the large-r
// tail sqrt(2) A^2 r^(-1/2) with A = 0.6450025.
namespace xxchain {

// Field in [-1, 1] and its band angle omega = arccos(b).
struct BulkParams {
  double b = 0.0;
  double omega = 0.0;
};

inline constexpr double kXxAsymptoteAmplitude = 0.6450025;

// Validates |b| <= 1.
BulkParams bulk_params(double b);

// Ground energy per spin: (2/pi)[b(arccos b - pi/2) - sqrt(1-b^2)] for
// |b| <= 1, and -|b| in the polarized phases.
double energy_per_spin(double b);

// Bulk kernel g(r), r >= 0.
double bulk_kernel(const BulkParams& params, int r);

// 1 - 2 arccos(b)/pi, saturating at +/-1 outside the critical window.
double bulk_magnetization(double b);

double bulk_zz(const BulkParams& params, int r);

// Bulk <sigma^x sigma^x> at distance r as a Toeplitz determinant;
// r is capped at 500.
double bulk_xx(const BulkParams& params, int r);

// B = 0 product closed form for the bulk transverse correlator.
double bulk_xx_product_b0(int r);

// sqrt(2) A^2 r^(-1/2), the bulk large-r tail at B = 0.
double xx_asymptote(int r);

// Bulk pair concurrence at distance r, through the two-spin density
// pipeline.
double bulk_concurrence(const BulkParams& params, int r);

// Filled-mode fraction arccos(b)/pi in [0, 1].
double k_fraction(double b);

}  // namespace xxchain
