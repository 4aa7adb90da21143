#include "camsel/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace camsel {

namespace {

double logdet_spd(const Eigen::MatrixXd& m) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("logdet of non-SPD matrix");
  }
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

// Fills `scores` with l(x) = -c + x^T K x for x = L z, z standard normal.
void score_batch(const Eigen::MatrixXd& chol, const Eigen::MatrixXd& K,
                 double c, std::mt19937_64& rng, std::vector<double>& scores,
                 std::int64_t n_samples) {
  const int n = static_cast<int>(chol.rows());
  constexpr std::int64_t kBatch = 4096;
  std::normal_distribution<double> normal(0.0, 1.0);
  scores.reserve(scores.size() + n_samples);

  Eigen::MatrixXd z(n, kBatch);
  for (std::int64_t done = 0; done < n_samples;) {
    const std::int64_t m = std::min(kBatch, n_samples - done);
    for (std::int64_t j = 0; j < m; ++j) {
      for (int i = 0; i < n; ++i) z(i, j) = normal(rng);
    }
    Eigen::MatrixXd x = chol * z.leftCols(m);
    Eigen::ArrayXd quad = (x.array() * (K * x).array()).colwise().sum();
    for (std::int64_t j = 0; j < m; ++j) scores.push_back(-c + quad(j));
    done += m;
  }
}

}  // namespace

LlrtSamples sample_llrt(const CorrelationMatrix& sigma,
                        const CorrelationMatrix& model,
                        std::int64_t n_samples, std::uint64_t seed) {
  const int n = sigma.dim();
  if (model.dim() != n) {
    throw DimensionMismatch("sigma and model dimensions differ");
  }
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd sigma_inv = sigma.mat().llt().solve(I);
  Eigen::MatrixXd model_inv = model.mat().llt().solve(I);
  Eigen::MatrixXd K = 0.5 * (sigma_inv - model_inv);
  const double c = -0.5 * (logdet_spd(sigma.mat()) - logdet_spd(model.mat()));

  Eigen::MatrixXd chol_sigma = sigma.mat().llt().matrixL();
  Eigen::MatrixXd chol_model = model.mat().llt().matrixL();

  LlrtSamples out;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  score_batch(chol_sigma, K, c, rng, out.h0_scores, n_samples);
  score_batch(chol_model, K, c, rng, out.h1_scores, n_samples);
  return out;
}

RocEstimate empirical_roc(const LlrtSamples& samples, int curve_points) {
  const auto& h0 = samples.h0_scores;
  const auto& h1 = samples.h1_scores;
  if (h0.empty() || h1.empty()) throw OutOfDomain("empty score sets");
  const std::size_t n0 = h0.size(), n1 = h1.size();

  // Mann-Whitney via joint ranking with average ranks for ties.
  std::vector<std::pair<double, int>> merged;
  merged.reserve(n0 + n1);
  for (double v : h0) merged.emplace_back(v, 0);
  for (double v : h1) merged.emplace_back(v, 1);
  std::sort(merged.begin(), merged.end());

  double rank_sum1 = 0.0;
  for (std::size_t i = 0; i < merged.size();) {
    std::size_t j = i;
    while (j < merged.size() && merged[j].first == merged[i].first) ++j;
    const double avg_rank = 0.5 * (i + 1 + j);  // 1-based average rank
    for (std::size_t k = i; k < j; ++k) {
      if (merged[k].second == 1) rank_sum1 += avg_rank;
    }
    i = j;
  }
  const double u1 = rank_sum1 - 0.5 * n1 * (n1 + 1.0);
  RocEstimate roc;
  roc.auc_mw = u1 / (static_cast<double>(n0) * static_cast<double>(n1));
  roc.se = std::sqrt(roc.auc_mw * (1.0 - roc.auc_mw) /
                     static_cast<double>(std::min(n0, n1)));

  // ROC curve at uniform false-alarm levels z_k = k / curve_points:
  // threshold = H0 score with exceedance fraction z_k.
  std::vector<double> s0(h0), s1(h1);
  std::sort(s0.begin(), s0.end(), std::greater<double>());
  std::sort(s1.begin(), s1.end(), std::greater<double>());
  const int cp = std::min<std::size_t>(curve_points, n0);
  roc.points.reserve(cp + 1);
  roc.points.emplace_back(0.0, 0.0);
  for (int k = 1; k < cp; ++k) {
    const double z = static_cast<double>(k) / cp;
    // Largest threshold tau with #{h0 >= tau}/n0 >= z.
    const std::size_t idx =
        static_cast<std::size_t>(std::ceil(z * n0)) - 1;
    const double tau = s0[idx];
    // Detection probability: fraction of h1 >= tau.
    const std::size_t cnt =
        std::upper_bound(s1.begin(), s1.end(), tau, std::greater<double>()) -
        s1.begin();
    double det = static_cast<double>(cnt) / n1;
    // Actual false alarm at this threshold (>= z because of ties).
    const std::size_t cnt0 =
        std::upper_bound(s0.begin(), s0.end(), tau, std::greater<double>()) -
        s0.begin();
    double fa = static_cast<double>(cnt0) / n0;
    roc.points.emplace_back(fa, det);
  }
  roc.points.emplace_back(1.0, 1.0);
  // Enforce monotonicity (ties can produce locally equal points).
  for (std::size_t i = 1; i < roc.points.size(); ++i) {
    roc.points[i].first = std::max(roc.points[i].first,
                                   roc.points[i - 1].first);
    roc.points[i].second = std::max(roc.points[i].second,
                                    roc.points[i - 1].second);
  }
  return roc;
}

std::pair<double, double> roc_kl_estimate(const RocEstimate& roc, int bins) {
  if (bins < 20) throw OutOfDomain("bins must be >= 20");
  // Interpolate the curve at z = i/bins.
  auto interp = [&](double z) {
    const auto& pts = roc.points;
    auto it = std::lower_bound(
        pts.begin(), pts.end(), z,
        [](const std::pair<double, double>& p, double v) { return p.first < v; });
    if (it == pts.begin()) return it->second;
    if (it == pts.end()) return pts.back().second;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    if (hi.first == lo.first) return hi.second;
    const double w = (z - lo.first) / (hi.first - lo.first);
    return lo.second + w * (hi.second - lo.second);
  };

  double kl10 = 0.0, kl01 = 0.0;
  double prev = interp(0.0);
  for (int i = 0; i < bins; ++i) {
    const double next = interp(static_cast<double>(i + 1) / bins);
    const double hprime = (next - prev) * bins;
    if (hprime <= 0.0) {
      throw EmptyBin("flat ROC segment in bin " + std::to_string(i));
    }
    kl10 -= std::log(hprime) / bins;
    kl01 -= hprime * std::log(hprime) / bins;
    prev = next;
  }
  return {kl10, kl01};
}

std::pair<double, double> roc_kl_bootstrap_se(const LlrtSamples& samples,
                                              int bins, int replicates,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n0 = samples.h0_scores.size();
  const std::size_t n1 = samples.h1_scores.size();
  std::uniform_int_distribution<std::size_t> pick0(0, n0 - 1), pick1(0, n1 - 1);

  std::vector<double> v10, v01;
  for (int r = 0; r < replicates; ++r) {
    LlrtSamples rep;
    rep.h0_scores.reserve(n0);
    rep.h1_scores.reserve(n1);
    for (std::size_t i = 0; i < n0; ++i) {
      rep.h0_scores.push_back(samples.h0_scores[pick0(rng)]);
    }
    for (std::size_t i = 0; i < n1; ++i) {
      rep.h1_scores.push_back(samples.h1_scores[pick1(rng)]);
    }
    const auto [a, b] = roc_kl_estimate(empirical_roc(rep), bins);
    v10.push_back(a);
    v01.push_back(b);
  }
  auto sd = [](const std::vector<double>& v) {
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / (v.size() - 1));
  };
  return {sd(v10), sd(v01)};
}

double bessel_k0(double x) {
  if (!(x > 0.0)) throw OutOfDomain("K0 requires x > 0");
  if (x <= 2.0) {
    const double t = x / 3.75;
    const double t2 = t * t;
    const double i0 =
        1.0 + t2 * (3.5156229 +
                    t2 * (3.0899424 +
                          t2 * (1.2067492 +
                                t2 * (0.2659732 +
                                      t2 * (0.0360768 + t2 * 0.0045813)))));
    const double y = 0.25 * x * x;
    return -std::log(0.5 * x) * i0 +
           (-0.57721566 +
            y * (0.42278420 +
                 y * (0.23069756 +
                      y * (0.03488590 +
                           y * (0.00262698 +
                                y * (0.00010750 + y * 0.00000740))))));
  }
  const double y = 2.0 / x;
  const double poly =
      1.25331414 +
      y * (-0.07832358 +
           y * (0.02189568 +
                y * (-0.01062446 +
                     y * (0.00587872 +
                          y * (-0.00251540 + y * 0.00053208)))));
  return std::exp(-x) / std::sqrt(x) * poly;
}

double gal_pdf(double alpha, double l) {
  if (!(alpha > 0.0)) throw OutOfDomain("alpha must be positive");
  if (l == 0.0) throw OutOfDomain("GAL density diverges at l = 0");
  const double c = std::sqrt(1.0 / alpha + 0.25);
  return std::exp(0.5 * l) / (M_PI * std::sqrt(alpha)) *
         bessel_k0(c * std::abs(l));
}

double gal_cdf(double alpha, double x, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) throw OutOfDomain("alpha must be positive");
  const double c = std::sqrt(1.0 / alpha + 0.25);
  // Left tail decays like e^{-(c - 1/2)|l|}; truncate where it is < 1e-13.
  const double rate = c - 0.5;
  const double lmin = -(40.0 / rate + 1.0);
  if (x <= lmin) return 0.0;

  auto f = [&](double l) { return gal_pdf(alpha, l); };
  double acc = 0.0;
  if (x <= 0.0) return adaptive_gk(f, lmin, x, cfg);
  acc = adaptive_gk(f, lmin, 0.0, cfg);
  acc += adaptive_gk(f, 0.0, x, cfg);
  return std::min(acc, 1.0);
}

GalCheckReport gal_component_check(double lambda, std::int64_t n_samples,
                                   std::uint64_t seed) {
  if (!(lambda > 0.0) || lambda == 1.0) {
    throw OutOfDomain("lambda must be positive and != 1");
  }
  const double alpha = lambda + 1.0 / lambda - 2.0;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> draws;
  draws.reserve(n_samples);
  double mean_acc = 0.0, sq_acc = 0.0;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const double w = normal(rng);
    const double z = normal(rng);
    const double v = 0.5 * (lambda - 1.0) * w * w -
                     0.5 * (1.0 - 1.0 / lambda) * z * z;
    draws.push_back(v);
    mean_acc += v;
    sq_acc += v * v;
  }
  std::sort(draws.begin(), draws.end());

  // Cumulative CDF along the sorted draws: integrate segment by segment.
  const double c = std::sqrt(1.0 / alpha + 0.25);
  const double lmin = -(40.0 / (c - 0.5) + 1.0);
  auto f = [&](double l) { return gal_pdf(alpha, l); };
  QuadratureConfig seg_cfg;
  seg_cfg.abs_tol = 1e-12;

  GalCheckReport rep;
  rep.alpha = alpha;
  const double n = static_cast<double>(n_samples);
  double cum = 0.0;
  double prev = lmin;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const double xi = draws[i];
    if (xi > prev) {
      if (prev < 0.0 && xi > 0.0) {
        cum += adaptive_gk(f, prev, 0.0, seg_cfg);
        cum += adaptive_gk(f, 0.0, xi, seg_cfg);
      } else {
        cum += adaptive_gk(f, prev, xi, seg_cfg);
      }
      prev = xi;
    }
    const double fx = std::min(cum, 1.0);
    rep.ks_distance = std::max(rep.ks_distance,
                               std::abs(fx - i / n));
    rep.ks_distance = std::max(rep.ks_distance,
                               std::abs(fx - (i + 1) / n));
  }
  rep.ks_threshold_1pct = 1.63 / std::sqrt(n);
  rep.empirical_mean = mean_acc / n;
  const double var = sq_acc / n - rep.empirical_mean * rep.empirical_mean;
  rep.mean_se = std::sqrt(var / n);
  return rep;
}

}  // namespace camsel
