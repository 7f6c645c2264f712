#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "xxchain/kernel.hpp"
#include "xxchain/oracle.hpp"
#include "xxchain/pairstate.hpp"
#include "xxchain/spectrum.hpp"

using namespace xxchain;

TEST_CASE("one-tangle") {
  CHECK(one_tangle(kernel_matrix(3, 0), 1) == 0.0);
  CHECK(one_tangle(kernel_matrix(3, 1), 1) ==
        doctest::Approx(0.75).epsilon(1e-13));
  // center site of the 19-chain at zero net field region: <sigma^z> = 0
  // exactly, so the tangle saturates
  CHECK(one_tangle(kernel_matrix(19, 9), 10) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // while the sum rule fixes the site-averaged magnetization to 1/19
  const auto kern = kernel_matrix(19, 9);
  double total = 0.0;
  for (int l = 1; l <= 19; ++l) total += magnetization(kern, l);
  CHECK(total / 19 == doctest::Approx(1.0 / 19).epsilon(1e-12));
}

TEST_CASE("concurrence of explicit densities") {
  CHECK(concurrence({1.0, 0.0, 0.0, 0.0, 0.0}) == 0.0);
  CHECK(concurrence(two_spin_density(kernel_matrix(3, 1), 1, 2)) ==
        doctest::Approx(0.7071067811865476).epsilon(1e-13));
  // residue-sized weights act as zero
  CHECK(concurrence({0.25, -5e-13, 0.5, 0.25, 0.3}) ==
        doctest::Approx(0.6).epsilon(1e-12));
  CHECK_THROWS_AS(concurrence({0.25, -1e-6, 0.5, 0.25, 0.3}),
                  std::domain_error);
}

TEST_CASE("concurrence matches the brute-force reduced matrix") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      const double b = region_midpoint(n, k);
      const auto psi = oracle::build_state(n, b);
      const auto kern = kernel_matrix(n, k);
      for (int l = 1; l <= n; ++l)
        for (int m = l + 1; m <= n; ++m) {
          const auto rho = oracle::reduced_density(psi, {l, m});
          const double reference =
              concurrence({rho[0], rho[15], rho[5], rho[10], rho[6]});
          CHECK(std::abs(pair_concurrence(kern, l, m) - reference) < 1e-10);
        }
    }
  }
}

TEST_CASE("entanglement range") {
  CHECK(entanglement_range(19, 0, 1, 1e-6) == 0);
  CHECK(entanglement_range(19, 9, 5, 1e-6) == 1);
  CHECK(entanglement_range(19, 1, 5, 1e-6) >= 2);
  CHECK_THROWS_AS(entanglement_range(19, 1, 19, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(entanglement_range(19, 1, 5, 0.0), std::invalid_argument);
}

TEST_CASE("region midpoints sit inside their regions") {
  for (int n : {1, 6, 19}) {
    for (int k = 0; k <= n; ++k)
      CHECK(region_index({n, region_midpoint(n, k)}) == k);
  }
}

TEST_CASE("tangle sweep structure at n = 19") {
  const auto sweep = measure_sweep(19, 9, 0, Measure::tangle);
  REQUIRE(sweep.size() == 20);
  CHECK(sweep.front().k == 0);
  CHECK(sweep.front().value == 0.0);
  for (std::size_t i = 0; i < sweep.size(); ++i)
    CHECK(sweep[i].k == static_cast<int>(i));
  // first jump grows from the chain end towards the center
  const auto end_site = measure_sweep(19, 1, 0, Measure::tangle);
  CHECK(sweep[1].value - sweep[0].value >
        end_site[1].value - end_site[0].value);
}

TEST_CASE("concurrence sweep has the region-lattice jump structure") {
  const auto sweep = measure_sweep(19, 9, 10, Measure::concurrence);
  REQUIRE(sweep.size() == 20);
  int jumps = 0;
  for (std::size_t i = 1; i < sweep.size(); ++i)
    if (std::abs(sweep[i].value - sweep[i - 1].value) > 1e-12) ++jumps;
  // the B = 0 crossing connects particle-hole mirror regions and is
  // invisible to the concurrence; all other crossings jump
  CHECK(jumps == 18);
  const auto mirror = 9;  // regions 9 and 10 are mirrors at n = 19
  CHECK(std::abs(sweep[mirror + 1].value - sweep[mirror].value) <= 1e-12);
}

TEST_CASE("measures are constant within a region") {
  const int n = 13;
  const int k = 4;
  const auto fields = crossing_fields(n);
  const double hi = fields[k - 1];
  const double lo = fields[k];
  double reference = 0.0;
  bool first = true;
  for (int i = 1; i <= 9; ++i) {
    const double b = lo + (hi - lo) * i / 10.0;
    REQUIRE(region_index({n, b}) == k);
    const auto kern = kernel_matrix(n, region_index({n, b}));
    const double tau = one_tangle(kern, 5);
    const double c = pair_concurrence(kern, 5, 6);
    if (first) {
      reference = tau + c;
      first = false;
    }
    CHECK(std::abs(tau + c - reference) < 1e-14);
  }
}

TEST_CASE("concurrence symmetry under site reflection") {
  for (int n : {5, 10, 17}) {
    for (int k = 0; k <= n; ++k) {
      const auto kern = kernel_matrix(n, k);
      for (int l = 1; l <= n; ++l)
        for (int m = l + 1; m <= n; ++m)
          CHECK(std::abs(pair_concurrence(kern, l, m) -
                         pair_concurrence(kern, n + 1 - m, n + 1 - l)) <
                1e-10);
    }
  }
}

TEST_CASE("one-tangle is particle-hole symmetric") {
  for (int n : {4, 9, 14}) {
    for (int k = 0; k <= n; ++k) {
      const auto kern = kernel_matrix(n, k);
      const auto mirror = kernel_matrix(n, n - k);
      for (int l = 1; l <= n; ++l)
        CHECK(std::abs(one_tangle(kern, l) - one_tangle(mirror, l)) < 1e-10);
    }
  }
}

TEST_CASE("concurrence is bounded by the transverse correlator") {
  for (int n : {6, 12}) {
    for (int k = 0; k <= n; ++k) {
      const auto kern = kernel_matrix(n, k);
      for (int l = 1; l <= n; ++l)
        for (int m = l + 1; m <= n; ++m) {
          const auto dens = two_spin_density(kern, l, m);
          const double c = concurrence(dens);
          CHECK(c <= 2.0 * std::abs(dens.e) + 1e-12);
          CHECK(2.0 * std::abs(dens.e) <=
                std::abs(xx_corr(kern, l, m)) + 1e-12);
          CHECK(c >= 0.0);
          CHECK(c <= 1.0 + 1e-12);
        }
    }
  }
}
