#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "camsel/graph_model.hpp"
#include "camsel/matrix_core.hpp"
#include "helpers.hpp"

using namespace camsel;

TEST_CASE("validate_correlation accepts valid matrices") {
  CHECK_NOTHROW(validate_correlation(Eigen::MatrixXd::Identity(4, 4)));
  CHECK_NOTHROW(validate_correlation(testutil::example4_raw()));
}

TEST_CASE("validate_correlation rejections") {
  SUBCASE("non-square") {
    CHECK_THROWS_AS(validate_correlation(Eigen::MatrixXd::Zero(3, 4)),
                    NotSquare);
  }
  SUBCASE("indefinite: off-diagonal 1.2") {
    Eigen::MatrixXd m(2, 2);
    m << 1.0, 1.2, 1.2, 1.0;
    CHECK_THROWS_AS(validate_correlation(m), NotPositiveDefinite);
  }
  SUBCASE("bad diagonal") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
    m(1, 1) = 1.5;
    CHECK_THROWS_AS(validate_correlation(m), BadDiagonal);
  }
  SUBCASE("asymmetric beyond tolerance") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
    m(0, 1) = 0.5;
    m(1, 0) = 0.4;
    CHECK_THROWS_AS(validate_correlation(m), NotSymmetric);
  }
  SUBCASE("tiny skew is symmetrized") {
    Eigen::MatrixXd m = testutil::example4_raw();
    m(0, 1) += 5e-10;
    const CorrelationMatrix c = validate_correlation(m);
    CHECK(c(0, 1) == doctest::Approx(c(1, 0)).epsilon(1e-14));
  }
}

TEST_CASE("cam of an equal pair is the identity") {
  const CorrelationMatrix s = testutil::example4();
  const CamMatrix d = cam(s, s);
  CHECK((d.delta() - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("cam dimension mismatch") {
  const CorrelationMatrix a = testutil::example4();
  const CorrelationMatrix b =
      validate_correlation(Eigen::MatrixXd::Identity(3, 3));
  CHECK_THROWS_AS(cam(a, b), DimensionMismatch);
}

TEST_CASE("4-node example CAM entries and trace") {
  const CorrelationMatrix sigma = testutil::example4();
  const CorrelationMatrix model =
      validate_correlation(testutil::example4_selected());
  const CamMatrix d = cam(sigma, model);

  Eigen::MatrixXd expected(4, 4);
  expected << 1.0, 0.0, 0.0412, -0.0588,  //
      0.0474, 1.0, 0.3042, -0.5098,       //
      0.0474, -0.0526, 1.0, 0.0,          //
      0.9789, -1.2632, 0.1421, 1.0;
  CHECK((d.delta() - expected).cwiseAbs().maxCoeff() < 5e-4);
  CHECK(d.delta().trace() == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("cam_spectrum identity and example trace") {
  const CorrelationMatrix s = testutil::example4();
  SUBCASE("identity pair") {
    const CamSpectrum sp = cam_spectrum(cam(s, s));
    for (double l : sp.lambdas) CHECK(l == doctest::Approx(1.0).epsilon(1e-10));
    for (double a : sp.alphas) CHECK(a >= 0.0);
    CHECK(sp.logdet == doctest::Approx(0.0).epsilon(1e-10));
  }
  SUBCASE("selection pair: trace n, mean-zero weights") {
    const CorrelationMatrix model =
        validate_correlation(testutil::example4_selected());
    const CamSpectrum sp = cam_spectrum(cam(s, model));
    CHECK(sp.trace == doctest::Approx(4.0).epsilon(1e-9));
    double weight_sum = 0.0;  // sum (1 - lambda_i), H0 mean of L
    for (double l : sp.lambdas) weight_sum += 1.0 - l;
    CHECK(std::abs(weight_sum) < 1e-8);
    CHECK(std::is_sorted(sp.lambdas.rbegin(), sp.lambdas.rend()));
  }
}

TEST_CASE("spectrum matches a general eigensolver on the non-symmetric CAM") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 5; ++rep) {
    const CorrelationMatrix a = testutil::random_correlation(5, rng);
    const CorrelationMatrix b = testutil::random_correlation(5, rng);
    const CamMatrix d = cam(a, b);
    const CamSpectrum sp = cam_spectrum(d);

    Eigen::EigenSolver<Eigen::MatrixXd> es(d.delta());
    std::vector<double> direct;
    for (int i = 0; i < 5; ++i) {
      CHECK(std::abs(es.eigenvalues()(i).imag()) < 1e-8);
      direct.push_back(es.eigenvalues()(i).real());
    }
    std::sort(direct.rbegin(), direct.rend());
    for (int i = 0; i < 5; ++i) {
      CHECK(sp.lambdas[i] == doctest::Approx(direct[i]).epsilon(1e-8));
    }
  }
}

TEST_CASE("from_lambdas consistency and rejection") {
  const CamSpectrum sp = CamSpectrum::from_lambdas({0.5, 2.0, 1.0});
  CHECK(sp.lambdas.front() == 2.0);
  CHECK(sp.lambdas.back() == 0.5);
  CHECK(sp.alphas.front() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sp.trace == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(sp.logdet == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(CamSpectrum::from_lambdas({1.0, -0.5}),
                  NonPositiveEigenvalue);
}

TEST_CASE("spd_sqrt reconstructs its input") {
  SUBCASE("identity") {
    const CorrelationMatrix i =
        validate_correlation(Eigen::MatrixXd::Identity(3, 3));
    CHECK((spd_sqrt(i) - Eigen::MatrixXd::Identity(3, 3)).norm() < 1e-12);
  }
  SUBCASE("2x2") {
    Eigen::MatrixXd m(2, 2);
    m << 1.0, 0.5, 0.5, 1.0;
    const CorrelationMatrix c = validate_correlation(m);
    const Eigen::MatrixXd s = spd_sqrt(c);
    CHECK((s * s - m).norm() / m.norm() < 1e-10);
  }
  SUBCASE("4-node example") {
    const CorrelationMatrix c = testutil::example4();
    const Eigen::MatrixXd s = spd_sqrt(c);
    CHECK((s * s - c.mat()).norm() / c.mat().norm() < 1e-10);
  }
}

TEST_CASE("alpha vanishes only for an exact model match") {
  std::mt19937_64 rng(23);
  const CorrelationMatrix a = testutil::random_correlation(6, rng);
  const CamSpectrum same = cam_spectrum(cam(a, a));
  double alpha_sum = 0.0;
  for (double x : same.alphas) alpha_sum += x;
  CHECK(alpha_sum < 1e-12);

  const CorrelationMatrix b = testutil::random_correlation(6, rng);
  const CamSpectrum diff = cam_spectrum(cam(a, b));
  alpha_sum = 0.0;
  for (double x : diff.alphas) alpha_sum += x;
  CHECK(alpha_sum > 1e-6);
}
