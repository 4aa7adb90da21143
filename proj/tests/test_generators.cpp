#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "camsel/generators.hpp"
#include "camsel/graph_model.hpp"
#include "helpers.hpp"

using namespace camsel;

TEST_CASE("Toeplitz equicorrelation") {
  const auto id = toeplitz_equicorrelation(4, 0.0);
  CHECK((id.mat() - Eigen::MatrixXd::Identity(4, 4)).norm() == 0.0);

  const auto m = toeplitz_equicorrelation(4, 0.5);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.mat());
  CHECK(es.eigenvalues()(3) == doctest::Approx(2.5).epsilon(1e-12));
  for (int i = 0; i < 3; ++i) {
    CHECK(es.eigenvalues()(i) == doctest::Approx(0.5).epsilon(1e-12));
  }

  CHECK_THROWS_AS(toeplitz_equicorrelation(4, -1.0 / 3.0), OutOfDomain);
  CHECK_THROWS_AS(toeplitz_equicorrelation(4, 1.0), OutOfDomain);
  CHECK_THROWS_AS(toeplitz_equicorrelation(1, 0.5), OutOfDomain);
}

TEST_CASE("star model closed form") {
  const auto star = star_model(3, 0.6);
  CHECK(star.mat(1, 2) == doctest::Approx(0.36).epsilon(1e-14));
  CHECK(star.mat(0, 1) == 0.6);
  CHECK(star.structure.is_spanning_tree());

  const auto zero = star_model(4, 0.0);
  CHECK((zero.mat - Eigen::MatrixXd::Identity(4, 4)).norm() == 0.0);

  for (int n : {3, 6, 12}) {
    for (double rho : {-0.2, 0.3, 0.8}) {
      if (!(rho > -1.0 / (n - 1))) continue;
      const auto sigma = toeplitz_equicorrelation(n, rho);
      const auto direct = star_model(n, rho);
      const auto selected =
          covariance_select(sigma, direct.structure);
      CHECK((direct.mat - selected.mat).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("chain model closed form") {
  const auto chain = chain_model(5, 0.5);
  CHECK(chain.mat(0, 4) == doctest::Approx(std::pow(0.5, 4)).epsilon(1e-14));
  CHECK(chain.structure.is_spanning_tree());

  for (int n : {3, 6, 12}) {
    for (double rho : {-0.2, 0.3, 0.8}) {
      if (!(rho > -1.0 / (n - 1))) continue;
      const auto sigma = toeplitz_equicorrelation(n, rho);
      const auto direct = chain_model(n, rho);
      const auto selected = covariance_select(sigma, direct.structure);
      CHECK((direct.mat - selected.mat).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("kernel network") {
  SUBCASE("two-sensor formula") {
    SensorLayout layout;
    layout.sigma_kernel = 2.0;
    layout.coords = {{0.0, 0.0}, {3.0, 4.0}};  // distance 5
    const auto m = kernel_network(layout);
    CHECK(m(0, 1) == doctest::Approx(std::exp(-25.0 / 8.0)).epsilon(1e-14));
  }
  SUBCASE("coincident sensors rejected") {
    SensorLayout layout;
    layout.sigma_kernel = 1.0;
    layout.coords = {{1.0, 1.0}, {1.0, 1.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(kernel_network(layout), NotPositiveDefinite);
  }
  SUBCASE("random layouts validate") {
    int ok = 0;
    for (int seed = 0; seed < 300; ++seed) {
      const SensorLayout layout = random_layout(8, 1.0, seed);
      // Standard-normal draws essentially never coincide.
      CHECK_NOTHROW(kernel_network(layout));
      ++ok;
    }
    CHECK(ok == 300);
  }
  SUBCASE("far-apart sensors approach independence") {
    SensorLayout layout;
    layout.sigma_kernel = 0.01;
    layout.coords = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
    const auto m = kernel_network(layout);
    CHECK((m.mat() - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("matrix CSV parsing") {
  CHECK(parse_matrix_csv("1,0.5\n0.5,1\n")(0, 1) == 0.5);
  CHECK_NOTHROW(parse_matrix_csv("# comment\n1,0.5\n\n0.5,1\n"));
  CHECK_THROWS_WITH_AS(parse_matrix_csv("1,0.5\n0.5\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_matrix_csv("1,0.5\n0.5,x\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_matrix_csv("1,0.5,0.1\n0.5,1,0.2\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_csv(""), ParseError);
}

TEST_CASE("covariance normalization") {
  // diag {4, 9}, off-diagonal 3 -> correlation 3/(2*3) = 0.5.
  const auto c = parse_matrix_csv("4,3\n3,9\n", /*normalize=*/true);
  CHECK(c(0, 1) == doctest::Approx(0.5).epsilon(1e-14));
  // Without the flag the diagonal fails validation.
  CHECK_THROWS_AS(parse_matrix_csv("4,3\n3,9\n"), BadDiagonal);
}

TEST_CASE("CSV round trip is bit exact") {
  std::mt19937_64 rng(51);
  const CorrelationMatrix m = testutil::random_correlation(6, rng);
  const std::string text = matrix_to_csv(m.mat());
  const CorrelationMatrix back = parse_matrix_csv(text);
  CHECK((m.mat() - back.mat()).cwiseAbs().maxCoeff() == 0.0);

  const std::string path = "/tmp/camsel_roundtrip_test.csv";
  save_matrix_csv(path, m.mat());
  const CorrelationMatrix loaded = load_matrix_csv(path);
  CHECK((m.mat() - loaded.mat()).cwiseAbs().maxCoeff() == 0.0);
  std::remove(path.c_str());
}
