#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "vgnet/errors.hpp"
#include "vgnet/powerlaw.hpp"
#include "vgnet/rng.hpp"

using namespace vgnet;

namespace {

std::vector<NodeId> sample_tail(double alpha, NodeId k_min, std::size_t n,
                                std::uint64_t seed) {
  DiscretePowerLawSampler sampler(alpha, k_min);
  std::mt19937_64 rng(seed);
  std::vector<NodeId> out(n);
  for (auto& k : out) k = sampler(rng);
  return out;
}

}  // namespace

TEST_CASE("Hurwitz zeta against closed forms and brute force") {
  SUBCASE("zeta(2, 1) is pi^2 / 6") {
    CHECK(std::abs(hurwitz_zeta(2.0, 1.0) -
                   std::numbers::pi * std::numbers::pi / 6.0) <= 1e-12);
  }
  SUBCASE("recurrence zeta(a, q) = zeta(a, q+1) + q^-a across a grid") {
    for (double a : {1.05, 1.5, 2.0, 2.5, 3.0, 4.5, 6.0}) {
      for (double q = 1.0; q <= 1001.0; q += 7.0) {
        const double lhs = hurwitz_zeta(a, q);
        const double rhs = hurwitz_zeta(a, q + 1.0) + std::pow(q, -a);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, lhs));
      }
    }
  }
  SUBCASE("agreement with a million-term long double summation") {
    CHECK(std::abs(hurwitz_zeta(2.5, 5.0) -
                   static_cast<double>(oracles::brute_zeta(2.5L, 5.0L))) <= 1e-10);
    CHECK(std::abs(hurwitz_zeta(1.2, 1.0) -
                   static_cast<double>(oracles::brute_zeta(1.2L, 1.0L))) <= 1e-10);
    CHECK(std::abs(hurwitz_zeta(3.0, 77.0) -
                   static_cast<double>(oracles::brute_zeta(3.0L, 77.0L))) <= 1e-12);
  }
  SUBCASE("domain checks") {
    CHECK_THROWS_AS((void)hurwitz_zeta(1.0, 1.0), VgError);
    CHECK_THROWS_AS((void)hurwitz_zeta(0.5, 1.0), VgError);
    CHECK_THROWS_AS((void)hurwitz_zeta(2.0, 0.0), VgError);
    CHECK_THROWS_AS((void)hurwitz_zeta(2.0, -3.0), VgError);
  }
}

TEST_CASE("fitted tail CCDF") {
  const double alpha = 2.3;
  const NodeId k_min = 4;
  SUBCASE("equals one at the tail start and decreases monotonically") {
    CHECK(fitted_ccdf(alpha, k_min, k_min) == doctest::Approx(1.0).epsilon(1e-14));
    double prev = 1.0 + 1e-15;
    for (NodeId k = k_min; k < k_min + 200; ++k) {
      const double c = fitted_ccdf(alpha, k_min, k);
      CHECK(c < prev);
      CHECK(c > 0.0);
      prev = c;
    }
  }
  SUBCASE("pmf telescoping: ccdf(k) - ccdf(k+1) = k^-a / zeta(a, k_min)") {
    const double z = hurwitz_zeta(alpha, static_cast<double>(k_min));
    for (NodeId k : {4, 5, 9, 30, 100}) {
      const double pmf = fitted_ccdf(alpha, k_min, k) - fitted_ccdf(alpha, k_min, k + 1);
      CHECK(pmf == doctest::Approx(std::pow(k, -alpha) / z).epsilon(1e-9));
    }
  }
  SUBCASE("far value agrees with the brute-force oracle") {
    const double expect = static_cast<double>(
        oracles::brute_zeta(2.3L, 50.0L) / oracles::brute_zeta(2.3L, 4.0L));
    CHECK(std::abs(fitted_ccdf(alpha, k_min, 50) - expect) <= 1e-10);
  }
  SUBCASE("pmf over a long horizon sums to one") {
    const double z = hurwitz_zeta(alpha, static_cast<double>(k_min));
    double acc = 0;
    for (NodeId k = k_min; k < 200000; ++k)
      acc += std::pow(static_cast<double>(k), -alpha) / z;
    acc += fitted_ccdf(alpha, k_min, 200000);  // exact remainder
    CHECK(acc == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("queries below the tail start are rejected") {
    CHECK_THROWS_AS((void)fitted_ccdf(alpha, k_min, 3), VgError);
  }
}

TEST_CASE("maximum-likelihood exponent") {
  SUBCASE("recovers a planted exponent") {
    const auto degrees = sample_tail(2.5, 5, 100000, 42);
    const auto fit = fit_alpha(degrees, 5);
    CHECK(fit.alpha > 2.45);
    CHECK(fit.alpha < 2.55);
    CHECK(fit.log_likelihood < 0.0);
  }
  SUBCASE("the reported likelihood is the likelihood of the reported alpha") {
    const auto degrees = sample_tail(3.0, 2, 5000, 7);
    const auto fit = fit_alpha(degrees, 2);
    double ln_sum = 0;
    std::int64_t n = 0;
    for (NodeId k : degrees)
      if (k >= 2) {
        ln_sum += std::log(static_cast<double>(k));
        ++n;
      }
    const double expect = -static_cast<double>(n) * std::log(hurwitz_zeta(fit.alpha, 2.0)) -
                          fit.alpha * ln_sum;
    CHECK(fit.log_likelihood == doctest::Approx(expect).epsilon(1e-9));
  }
  SUBCASE("duplicating every observation leaves the estimate unchanged") {
    auto degrees = sample_tail(2.2, 3, 2000, 9);
    const auto base = fit_alpha(degrees, 3);
    auto doubled = degrees;
    doubled.insert(doubled.end(), degrees.begin(), degrees.end());
    const auto twice = fit_alpha(doubled, 3);
    CHECK(twice.alpha == doctest::Approx(base.alpha).epsilon(1e-9));
  }
  SUBCASE("a two-valued tail still has an interior maximum") {
    std::vector<NodeId> degrees(80, 2);
    std::fill_n(degrees.begin(), 60, static_cast<NodeId>(1));
    const auto fit = fit_alpha(degrees, 1);
    CHECK(std::isfinite(fit.alpha));
    CHECK(fit.alpha > kAlphaLo);
    CHECK(fit.alpha < kAlphaHi);
  }
  SUBCASE("an all-equal tail pushes alpha to the boundary") {
    const std::vector<NodeId> degrees(60, 4);
    CHECK_THROWS_AS((void)fit_alpha(degrees, 4), VgError);
    try {
      (void)fit_alpha(degrees, 4);
    } catch (const VgError& e) {
      CHECK(e.code() == errc::no_maximum_in_range);
    }
  }
  SUBCASE("tails below the minimum size are rejected") {
    const std::vector<NodeId> degrees(49, 3);
    CHECK_THROWS_AS((void)fit_alpha(degrees, 3), VgError);
    try {
      (void)fit_alpha(degrees, 3);
    } catch (const VgError& e) {
      CHECK(e.code() == errc::tail_too_small);
    }
  }
}

TEST_CASE("tail-start selection") {
  SUBCASE("pure power-law data keeps an early tail start") {
    const auto degrees = sample_tail(2.5, 1, 50000, 1234);
    const auto fit = select_kmin(degrees);
    CHECK(fit.k_min <= 3);
    CHECK(fit.alpha == doctest::Approx(2.5).epsilon(0.04));
    CHECK(fit.beta == doctest::Approx(fit.alpha - 1.0).epsilon(1e-15));
    CHECK(fit.n_tail >= kMinTailSize);
    CHECK(fit.ks_distance >= 0.0);
    CHECK(fit.ks_distance < 0.05);
    CHECK_FALSE(fit.gof_p_value.has_value());
  }
  SUBCASE("a spliced uniform body moves the tail start past the body") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<NodeId> body(1, 9);
    std::vector<NodeId> degrees;
    for (int i = 0; i < 20000; ++i) degrees.push_back(body(rng));
    const auto tail = sample_tail(2.5, 10, 20000, 6);
    degrees.insert(degrees.end(), tail.begin(), tail.end());
    const auto fit = select_kmin(degrees);
    CHECK(fit.k_min >= 8);
    CHECK(fit.k_min <= 12);
    CHECK(fit.alpha == doctest::Approx(2.5).epsilon(0.05));
  }
  SUBCASE("constant degrees cannot be fitted") {
    const std::vector<NodeId> degrees(500, 6);
    CHECK_THROWS_AS((void)select_kmin(degrees), VgError);
    try {
      (void)select_kmin(degrees);
    } catch (const VgError& e) {
      CHECK(e.code() == errc::tail_too_small);
    }
  }
  SUBCASE("short inputs cannot be fitted") {
    const auto degrees = sample_tail(2.0, 1, 49, 3);
    CHECK_THROWS_AS((void)select_kmin(degrees), VgError);
  }
  SUBCASE("the KS distance really is the supremum over observed support") {
    const auto degrees = sample_tail(2.8, 2, 3000, 77);
    const auto fit = select_kmin(degrees);
    std::vector<NodeId> tail;
    for (NodeId k : degrees)
      if (k >= fit.k_min) tail.push_back(k);
    std::sort(tail.begin(), tail.end());
    const double n = static_cast<double>(tail.size());
    double sup = 0;
    for (std::size_t i = 0; i < tail.size();) {
      std::size_t j = i;
      while (j < tail.size() && tail[j] == tail[i]) ++j;
      // Empirical CDF at tail[i] (inclusive) vs model CDF.
      const double emp = static_cast<double>(j) / n;
      const double model = 1.0 - fitted_ccdf(fit.alpha, fit.k_min, tail[i] + 1);
      sup = std::max(sup, std::abs(emp - model));
      i = j;
    }
    CHECK(fit.ks_distance == doctest::Approx(sup).epsilon(1e-9));
  }
}

TEST_CASE("exact inverse-CDF sampler") {
  SUBCASE("quantiles are monotone and start at k_min") {
    DiscretePowerLawSampler s(2.5, 3);
    CHECK(s.quantile(0.0) == 3);
    NodeId prev = 3;
    for (double u = 0.0; u < 1.0; u += 0.001) {
      const NodeId k = s.quantile(u);
      CHECK(k >= prev);
      prev = k;
    }
  }
  SUBCASE("quantile inverts the model CDF at the far tail") {
    DiscretePowerLawSampler s(2.0, 1);
    for (double u : {0.999, 0.99999, 0.9999999}) {
      const NodeId k = s.quantile(u);
      REQUIRE(k > 1);
      // Pr(K <= k-1) < u <= Pr(K <= k)
      CHECK(1.0 - fitted_ccdf(2.0, 1, k) < u);
      CHECK(1.0 - fitted_ccdf(2.0, 1, k + 1) >= u);
    }
  }
  SUBCASE("draws are deterministic given the generator state") {
    DiscretePowerLawSampler s(2.5, 2);
    std::mt19937_64 a(99), b(99);
    for (int i = 0; i < 1000; ++i) CHECK(s(a) == s(b));
  }
  SUBCASE("empirical CCDF of draws matches the model") {
    const auto draws = sample_tail(2.5, 2, 200000, 1);
    const double n = static_cast<double>(draws.size());
    for (NodeId k : {2, 3, 5, 10, 30}) {
      const double emp =
          static_cast<double>(std::count_if(draws.begin(), draws.end(),
                                            [&](NodeId d) { return d >= k; })) /
          n;
      CHECK(emp == doctest::Approx(fitted_ccdf(2.5, 2, k)).epsilon(0.03));
    }
  }
  SUBCASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(DiscretePowerLawSampler(1.0, 1), VgError);
    CHECK_THROWS_AS(DiscretePowerLawSampler(2.0, 0), VgError);
  }
}

TEST_CASE("bootstrap goodness of fit") {
  SUBCASE("zero resamples is a caller error") {
    const auto degrees = sample_tail(2.5, 1, 1000, 2);
    const auto fit = select_kmin(degrees);
    CHECK_THROWS_AS((void)bootstrap_gof(fit, degrees, 0, 1), VgError);
  }
  SUBCASE("deterministic in the seed") {
    const auto degrees = sample_tail(2.5, 1, 800, 3);
    const auto fit = select_kmin(degrees);
    const double p1 = bootstrap_gof(fit, degrees, 50, 11);
    const double p2 = bootstrap_gof(fit, degrees, 50, 11);
    CHECK(p1 == p2);
  }
  SUBCASE("does not reject data drawn from the fitted family") {
    int accepted = 0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t) {
      const auto degrees = sample_tail(2.5, 1, 1000, 100 + static_cast<std::uint64_t>(t));
      const auto fit = select_kmin(degrees);
      const double p = bootstrap_gof(fit, degrees, 60, derive_seed(9, static_cast<std::uint64_t>(t)));
      if (p > 0.05) ++accepted;
    }
    CHECK(accepted >= trials * 9 / 10);
  }
  SUBCASE("rejects a geometric tail masquerading as a power law") {
    std::mt19937_64 rng(6);
    std::geometric_distribution<NodeId> geo(0.25);
    std::vector<NodeId> degrees;
    for (int i = 0; i < 100000; ++i) degrees.push_back(1 + geo(rng));
    const auto fit = select_kmin(degrees);
    const double p = bootstrap_gof(fit, degrees, 100, 17);
    CHECK(p < 0.05);
  }
}
