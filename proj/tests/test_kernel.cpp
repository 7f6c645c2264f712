#include <cmath>
#include <stdexcept>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "xxchain/kernel.hpp"
#include "xxchain/oracle.hpp"
#include "xxchain/pairstate.hpp"
#include "xxchain/spectrum.hpp"

using namespace xxchain;

namespace {

// Independent reference: plain truncated mode sum from a precomputed
// amplitude table, no closed form anywhere.
struct SineTable {
  int n;
  std::vector<double> s;  // s[(r-1)*n + (l-1)] = S_l^r, r = 1..n
  explicit SineTable(int n_) : n(n_), s(static_cast<std::size_t>(n_) * n_) {
    for (int r = 1; r <= n; ++r)
      for (int l = 1; l <= n; ++l)
        s[static_cast<std::size_t>(r - 1) * n + (l - 1)] =
            sine_amplitude(n, r, l);
  }
  double amp(int r, int l) const {
    return s[static_cast<std::size_t>(r - 1) * n + (l - 1)];
  }
};

}  // namespace

TEST_CASE("kernel entries on the 3-site chain") {
  CHECK(kernel_entry(3, 0, 1, 2) == 0.0);
  CHECK(kernel_entry(3, 1, 1, 2) ==
        doctest::Approx(0.7071067811865476).epsilon(1e-14));
  CHECK(kernel_entry(3, 2, 1, 1) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK_THROWS_AS(kernel_entry(3, 4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(kernel_entry(3, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(kernel_entry(3, 1, 1, 4), std::invalid_argument);
}

TEST_CASE("closed form agrees with direct summation for every n <= 60") {
  for (int n = 1; n <= 60; ++n) {
    const SineTable table(n);
    double worst = 0.0;
    for (int l = 1; l <= n; ++l)
      for (int m = l; m <= n; ++m) {
        double direct = 0.0;
        for (int k = 0; k <= n; ++k) {
          if (k > 0) direct += 2.0 * table.amp(k, l) * table.amp(k, m);
          worst = std::max(worst, std::abs(kernel_entry(n, k, l, m) - direct));
        }
      }
    CHECK(worst < 1e-11);
  }
}

TEST_CASE("kernel matrix limits") {
  const auto empty = kernel_matrix(3, 0);
  for (double v : empty.g) CHECK(v == 0.0);

  const auto full = kernel_matrix(3, 3);
  for (int l = 1; l <= 3; ++l)
    for (int m = 1; m <= 3; ++m)
      CHECK(full(l, m) == doctest::Approx(l == m ? 2.0 : 0.0).epsilon(1e-12));

  // k = 1 is the rank-one projector on the first mode
  const auto one = kernel_matrix(3, 1);
  for (int l = 1; l <= 3; ++l)
    for (int m = 1; m <= 3; ++m)
      CHECK(one(l, m) == doctest::Approx(2.0 * sine_amplitude(3, 1, l) *
                                         sine_amplitude(3, 1, m))
                             .epsilon(1e-13));
}

TEST_CASE("kernel invariants: symmetry, diagonal range, trace, projector") {
  for (int n : {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 100}) {
    for (int k = 0; k <= n; ++k) {
      const auto kern = kernel_matrix(n, k);
      double trace = 0.0;
      for (int l = 1; l <= n; ++l) {
        trace += kern(l, l);
        CHECK(kern(l, l) >= -1e-12);
        CHECK(kern(l, l) <= 2.0 + 1e-12);
        for (int m = l + 1; m <= n; ++m) CHECK(kern(l, m) == kern(m, l));
      }
      CHECK(std::abs(trace - 2.0 * k) < 1e-10);

      // (g/2)^2 = g/2 entrywise
      double worst = 0.0;
      for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= n; ++m) {
          double prod = 0.0;
          for (int j = 1; j <= n; ++j)
            prod += 0.5 * kern(l, j) * 0.5 * kern(j, m);
          worst = std::max(worst, std::abs(prod - 0.5 * kern(l, m)));
        }
      CHECK(worst < 1e-10);
    }
  }
}

TEST_CASE("magnetization") {
  CHECK(magnetization(kernel_matrix(3, 0), 1) == 1.0);
  CHECK(magnetization(kernel_matrix(3, 3), 2) ==
        doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(magnetization(kernel_matrix(3, 1), 1) ==
        doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("magnetization sum rule") {
  for (int n : {2, 7, 19, 64}) {
    for (int k = 0; k <= n; ++k) {
      const auto kern = kernel_matrix(n, k);
      double total = 0.0;
      for (int l = 1; l <= n; ++l) total += magnetization(kern, l);
      CHECK(std::abs(total - (n - 2.0 * k)) < 1e-10);
    }
  }
}

TEST_CASE("zz correlator") {
  CHECK(zz_corr(kernel_matrix(3, 0), 1, 2) == 1.0);
  CHECK(zz_corr(kernel_matrix(3, 1), 1, 2) ==
        doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(zz_corr(kernel_matrix(3, 3), 1, 3) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(zz_corr(kernel_matrix(3, 1), 2, 2), std::invalid_argument);
}

TEST_CASE("xx correlator") {
  CHECK(xx_corr(kernel_matrix(3, 0), 1, 2) == 0.0);
  CHECK(xx_corr(kernel_matrix(3, 1), 1, 2) ==
        doctest::Approx(0.7071067811865476).epsilon(1e-14));
  CHECK(xx_corr(kernel_matrix(3, 1), 1, 3) ==
        doctest::Approx(0.5).epsilon(1e-13));
  CHECK_THROWS_AS(xx_corr(kernel_matrix(3, 1), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(xx_corr(kernel_matrix(3, 1), 3, 1), std::invalid_argument);
}

TEST_CASE("nearest-neighbor xx equals the kernel entry bitwise") {
  for (int n : {2, 9, 24}) {
    for (int k = 0; k <= n; ++k) {
      const auto kern = kernel_matrix(n, k);
      for (int l = 1; l < n; ++l)
        CHECK(xx_corr(kern, l, l + 1) == kern(l, l + 1));
    }
  }
}

TEST_CASE("two-spin density entries") {
  const auto polarized = two_spin_density(kernel_matrix(3, 0), 1, 2);
  CHECK(polarized.a_plus == 1.0);
  CHECK(polarized.a_minus == 0.0);
  CHECK(polarized.b_plus == 0.0);
  CHECK(polarized.b_minus == 0.0);
  CHECK(polarized.e == 0.0);

  const auto one_flip = two_spin_density(kernel_matrix(3, 1), 1, 2);
  CHECK(one_flip.a_plus == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(one_flip.a_minus == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(one_flip.b_plus == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(one_flip.b_minus == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(one_flip.e == doctest::Approx(0.3535533905932738).epsilon(1e-14));
  // the coherence saturates its positivity bound for the one-flip state
  CHECK(std::abs(one_flip.e) ==
        doctest::Approx(std::sqrt(one_flip.b_plus * one_flip.b_minus))
            .epsilon(1e-12));

  const auto flipped = two_spin_density(kernel_matrix(3, 3), 1, 2);
  CHECK(flipped.a_plus == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(flipped.a_minus == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(flipped.b_plus == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(flipped.b_minus == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(flipped.e == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("two-spin density invariants hold across sizes and regions") {
  for (int n : {2, 5, 11, 30}) {
    for (int k = 0; k <= n; ++k) {
      const auto kern = kernel_matrix(n, k);
      for (int l = 1; l <= n; ++l)
        for (int m = l + 1; m <= n; ++m) {
          const auto dens = two_spin_density(kern, l, m);
          CHECK(dens.a_plus >= -1e-12);
          CHECK(dens.a_minus >= -1e-12);
          CHECK(dens.b_plus >= -1e-12);
          CHECK(dens.b_minus >= -1e-12);
          CHECK(std::abs(dens.a_plus + dens.a_minus + dens.b_plus +
                         dens.b_minus - 1.0) < 1e-10);
          CHECK(std::abs(dens.e) <=
                std::sqrt(std::max(0.0, dens.b_plus) *
                          std::max(0.0, dens.b_minus)) +
                    1e-10);
        }
    }
  }
}

TEST_CASE("observables are symmetric under site reflection") {
  for (int n : {4, 9, 16}) {
    for (int k = 0; k <= n; ++k) {
      const auto kern = kernel_matrix(n, k);
      for (int l = 1; l <= n; ++l)
        CHECK(std::abs(magnetization(kern, l) -
                       magnetization(kern, n + 1 - l)) < 1e-10);
      for (int l = 1; l <= n; ++l)
        for (int m = l + 1; m <= n; ++m)
          CHECK(std::abs(zz_corr(kern, l, m) -
                         zz_corr(kern, n + 1 - l, n + 1 - m)) < 1e-10);
    }
  }
}

TEST_CASE("small chains agree with the brute-force state") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      const double b = region_midpoint(n, k);
      REQUIRE(region_index({n, b}) == k);
      const auto psi = oracle::build_state(n, b);
      const auto kern = kernel_matrix(n, k);
      for (int l = 1; l <= n; ++l)
        CHECK(std::abs(magnetization(kern, l) -
                       oracle::oracle_corr(psi, oracle::Observable::z, {l})) <
              1e-10);
      for (int l = 1; l <= n; ++l)
        for (int m = l + 1; m <= n; ++m) {
          CHECK(std::abs(zz_corr(kern, l, m) -
                         oracle::oracle_corr(psi, oracle::Observable::zz,
                                             {l, m})) < 1e-10);
          CHECK(std::abs(xx_corr(kern, l, m) -
                         oracle::oracle_corr(psi, oracle::Observable::xx,
                                             {l, m})) < 1e-10);
        }
    }
  }
}

TEST_CASE("domain wall density") {
  CHECK(domain_wall_density(kernel_matrix(3, 0)) == 0.0);
  CHECK(domain_wall_density(kernel_matrix(3, 3)) ==
        doctest::Approx(0.0).epsilon(1e-13));
  CHECK(domain_wall_density(kernel_matrix(3, 1)) ==
        doctest::Approx(0.75).epsilon(1e-13));
  CHECK_THROWS_AS(domain_wall_density(kernel_matrix(1, 0)),
                  std::invalid_argument);
}
