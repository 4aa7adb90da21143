#include <doctest.h>

#include <cmath>
#include <random>

#include "camsel/auc_bounds.hpp"
#include "camsel/divergences.hpp"
#include "camsel/generators.hpp"
#include "camsel/graph_model.hpp"
#include "camsel/spectral_auc.hpp"
#include "helpers.hpp"

using namespace camsel;

TEST_CASE("Chernoff lower bound hand values") {
  CHECK(chernoff_lower(CamSpectrum::from_lambdas({1.0, 1.0})) == 0.5);

  // alpha = 12 <-> lambda + 1/lambda = 14.
  const double lam = 0.5 * (14.0 + std::sqrt(14.0 * 14.0 - 4.0));
  const CamSpectrum one = CamSpectrum::from_lambdas({lam});
  CHECK(one.alphas[0] == doctest::Approx(12.0).epsilon(1e-10));
  CHECK(chernoff_lower(one) == doctest::Approx(0.5).epsilon(1e-12));

  const CamSpectrum two = CamSpectrum::from_lambdas({lam, lam});
  CHECK(chernoff_lower(two) == doctest::Approx(0.75).epsilon(1e-10));
}

TEST_CASE("feasible region curve") {
  CHECK_THROWS_AS(feasible_region_curve(0.0), OutOfDomain);
  CHECK_THROWS_AS(feasible_region_curve(-1.0), OutOfDomain);

  SUBCASE("limit at zero") {
    const auto p = feasible_region_curve(1e-9);
    CHECK(p.auc == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(p.d == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("series matches closed form at the cutoff") {
    const auto lo = feasible_region_curve(0.99999e-4);
    const auto hi = feasible_region_curve(1.00001e-4);
    CHECK(lo.auc == doctest::Approx(hi.auc).epsilon(1e-9));
    CHECK(lo.d == doctest::Approx(hi.d).epsilon(1e-4));
  }
  SUBCASE("large a") {
    const auto p = feasible_region_curve(700.0);
    CHECK(p.auc == doctest::Approx(1.0 - 1.0 / 700.0).epsilon(1e-3));
  }
  SUBCASE("both coordinates strictly increasing") {
    double prev_auc = 0.0, prev_d = -1.0;
    for (int i = 0; i < 400; ++i) {
      const double a = 1e-3 * std::pow(1e5, i / 399.0);  // up to 100
      const auto p = feasible_region_curve(a);
      CHECK(p.auc > prev_auc);
      CHECK(p.d > prev_d);
      prev_auc = p.auc;
      prev_d = p.d;
    }
  }
}

TEST_CASE("KL upper bound inversion") {
  const auto zero = kl_upper_bound(0.0);
  CHECK(zero.upper_auc == 0.5);
  CHECK(zero.a_param == 0.0);
  CHECK_THROWS_AS(kl_upper_bound(-0.1), OutOfDomain);

  SUBCASE("round trip at a0 = 3") {
    const double d3 = feasible_region_curve(3.0).d;
    const auto ub = kl_upper_bound(d3);
    CHECK(ub.a_param == doctest::Approx(3.0).epsilon(1e-8));
  }
  SUBCASE("never exceeds the asymptote") {
    for (double d : {1e-4, 0.01, 0.1, 0.4167, 1.0, 3.0, 8.0}) {
      const auto ub = kl_upper_bound(d);
      CHECK(ub.upper_auc <= 1.0 - std::exp(-d - 1.0) + 1e-9);
    }
  }
  SUBCASE("unbracketable d_star") {
    CHECK_THROWS_AS(kl_upper_bound(20.0), RootNotBracketed);
  }
}

TEST_CASE("asymptotic lower never exceeds the Chernoff bound") {
  CHECK(asymptotic_lower(CamSpectrum::from_lambdas({1.0, 1.0})) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // Single alpha = 8 hand value: 1 - e^{-1/2}.
  const double lam8 = 0.5 * (10.0 + std::sqrt(96.0));
  const CamSpectrum one = CamSpectrum::from_lambdas({lam8});
  CHECK(asymptotic_lower(one) ==
        doctest::Approx(1.0 - std::exp(-0.5)).epsilon(1e-10));
  CHECK(asymptotic_lower(one) <= chernoff_lower(one));

  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 19);
    const CorrelationMatrix a = testutil::random_correlation(n, rng);
    const CorrelationMatrix b = testutil::random_correlation(n, rng);
    const CamSpectrum sp = cam_spectrum(cam(a, b));
    CHECK(asymptotic_lower(sp) <= chernoff_lower(sp) + 1e-12);
  }
}

TEST_CASE("bound report structure") {
  SUBCASE("identity pair collapses to one half") {
    const CamSpectrum id = CamSpectrum::from_lambdas({1.0, 1.0, 1.0});
    const auto r = bound_report(id, divergences_from_spectrum(id));
    CHECK(r.lower == 0.5);
    CHECK(r.upper == doctest::Approx(0.5).epsilon(1e-7));
  }
  SUBCASE("4-node example sandwich") {
    const CorrelationMatrix sigma = testutil::example4();
    const auto mc = covariance_select(sigma, testutil::example4_tree());
    const CamSpectrum sp = cam_spectrum(cam(sigma, mc.correlation()));
    const auto r = bound_report(sp, divergences_from_spectrum(sp));
    const double auc = auc_exact(sp);
    CHECK(r.lower <= auc + 1e-7);
    CHECK(auc <= r.upper + 1e-7);
    CHECK(r.lower_asymptotic <= r.lower + 1e-12);
    CHECK(r.upper <= r.upper_asymptotic + 1e-12);
    CHECK(r.d_star == doctest::Approx(0.41675338519762).epsilon(1e-10));
  }
  SUBCASE("large d_star falls back to the asymptote") {
    const auto toe = toeplitz_equicorrelation(60, 0.9);
    const auto chain = chain_model(60, 0.9);
    const CamSpectrum sp = cam_spectrum(cam(toe, chain.correlation()));
    const auto d = divergences_from_spectrum(sp);
    const auto r = bound_report(sp, d);
    CHECK(r.upper == doctest::Approx(r.upper_asymptotic).epsilon(1e-12));
    CHECK(r.lower <= r.upper);
  }
}

TEST_CASE("bound decay grows linearly in n for Toeplitz star") {
  // Least-squares slope of -log(1 - lower bound) against n is positive.
  double sx = 0, sy = 0, sxy = 0, sxx = 0;
  int count = 0;
  for (int n = 5; n <= 60; n += 5) {
    const auto toe = toeplitz_equicorrelation(n, 0.9);
    const auto star = star_model(n, 0.9);
    const CamSpectrum sp = cam_spectrum(cam(toe, star.correlation()));
    const double y = -std::log(1.0 - chernoff_lower(sp));
    sx += n;
    sy += y;
    sxy += n * y;
    sxx += static_cast<double>(n) * n;
    ++count;
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  CHECK(slope > 0.0);
}
