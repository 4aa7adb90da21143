// camsel: covariance-selection quality analysis front-end.
//
// Subcommands:
//   analyze          full quality report for one matrix/model pair
//   sweep            model-family sweeps over dimension
//   trees            spanning-tree ensemble metrics
//   feasible-region  (AUC, KL) boundary curve
//
// Exit codes: 0 success, 2 input/validation error, 3 numerical
// non-convergence.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "camsel/chow_liu.hpp"
#include "camsel/generators.hpp"
#include "camsel/graph_model.hpp"
#include "camsel/mc_oracle.hpp"
#include "camsel/report.hpp"
#include "camsel/spectral_auc.hpp"
#include "camsel/tree_sampler.hpp"

namespace {

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw camsel::ParseError("cannot write '" + out_path + "'");
  out << content;
}

std::string edges_to_string(const camsel::EdgeSet& es) {
  std::string s;
  for (const auto& [u, v] : es.edges()) {
    if (!s.empty()) s += ';';
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s;
}

int run_analyze(const std::string& matrix_path, const std::string& tree_path,
                bool use_chow_liu, bool normalize, long long mc_samples,
                std::uint64_t seed, const std::string& out_path,
                const std::string& format) {
  const camsel::CorrelationMatrix sigma =
      camsel::load_matrix_csv(matrix_path, normalize);

  camsel::TreeStructure tree =
      use_chow_liu
          ? camsel::chow_liu_tree(sigma)
          : camsel::TreeStructure(
                camsel::load_edge_list(tree_path, sigma.dim()));
  const camsel::ModelCovariance mc = camsel::covariance_select(sigma, tree);
  const camsel::CorrelationMatrix model = mc.correlation();
  const camsel::CamSpectrum s =
      camsel::cam_spectrum(camsel::cam(sigma, model));

  camsel::QualityReport report = camsel::quality_report(s);
  if (mc_samples > 0) {
    const camsel::LlrtSamples samples =
        camsel::sample_llrt(sigma, model, mc_samples, seed);
    const camsel::RocEstimate roc = camsel::empirical_roc(samples);
    report.mc_auc = roc.auc_mw;
    report.mc_se = roc.se;
  }

  if (format == "csv") {
    emit(out_path, camsel::report_csv_header() + ",tree\n" +
                       camsel::report_to_csv(report) + "," +
                       edges_to_string(tree) + "\n");
  } else {
    emit(out_path, camsel::report_to_json(report) + "\n");
  }
  return 0;
}

int run_sweep(const std::string& family, int n_min, int n_max, double rho,
              double sigma_kernel, int runs, std::uint64_t seed,
              const std::string& out_path) {
  std::string out =
      "family,n,kl,reverse_kl,jeffreys,auc,auc_lower,auc_upper,"
      "one_minus_auc,log10_one_minus_auc\n";
  char buf[512];
  for (int n = n_min; n <= n_max; ++n) {
    double kl = 0, rkl = 0, jef = 0, auc = 0, lo = 0, hi = 0;
    int effective_runs = 1;

    if (family == "kernel-2d") {
      effective_runs = runs;
      for (int r = 0; r < runs; ++r) {
        const camsel::SensorLayout layout =
            camsel::random_layout(n, sigma_kernel, seed + 1000003ull * r + n);
        const camsel::CorrelationMatrix sx = camsel::kernel_network(layout);
        const camsel::TreeStructure tree = camsel::chow_liu_tree(sx);
        const camsel::CorrelationMatrix sm =
            camsel::covariance_select(sx, tree).correlation();
        const camsel::CamSpectrum s =
            camsel::cam_spectrum(camsel::cam(sx, sm));
        const camsel::QualityReport rep = camsel::quality_report(s);
        kl += rep.kl;
        rkl += rep.reverse_kl;
        jef += rep.jeffreys;
        auc += rep.auc;
        lo += rep.auc_lower;
        hi += rep.auc_upper;
      }
    } else {
      const camsel::CorrelationMatrix sx =
          camsel::toeplitz_equicorrelation(n, rho);
      const camsel::ModelCovariance model = family == "toeplitz-star"
                                                ? camsel::star_model(n, rho)
                                                : camsel::chain_model(n, rho);
      const camsel::CamSpectrum s =
          camsel::cam_spectrum(camsel::cam(sx, model.correlation()));
      const camsel::QualityReport rep = camsel::quality_report(s);
      kl = rep.kl;
      rkl = rep.reverse_kl;
      jef = rep.jeffreys;
      auc = rep.auc;
      lo = rep.auc_lower;
      hi = rep.auc_upper;
    }

    kl /= effective_runs;
    rkl /= effective_runs;
    jef /= effective_runs;
    auc /= effective_runs;
    lo /= effective_runs;
    hi /= effective_runs;
    const double oma = 1.0 - auc;
    std::snprintf(buf, sizeof buf,
                  "%s,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  family.c_str(), n, kl, rkl, jef, auc, lo, hi, oma,
                  std::log10(oma));
    out += buf;
  }
  emit(out_path, out);
  return 0;
}

int run_trees(const std::string& matrix_path, bool normalize,
              long long samples, bool enumerate, std::uint64_t seed,
              const std::string& out_path) {
  const camsel::CorrelationMatrix sigma =
      camsel::load_matrix_csv(matrix_path, normalize);

  std::vector<camsel::TreeStructure> trees;
  if (enumerate) {
    trees = camsel::enumerate_spanning_trees(sigma.dim());
  } else {
    std::mt19937_64 rng(seed);
    trees.reserve(samples);
    for (long long i = 0; i < samples; ++i) {
      trees.push_back(camsel::uniform_spanning_tree(sigma.dim(), rng));
    }
  }
  const camsel::TreeEnsemble ensemble =
      camsel::ensemble_metrics(sigma, trees);
  if (ensemble.skipped > 0) {
    std::cerr << "skipped " << ensemble.skipped
              << " trees (numerical failures)\n";
  }
  emit(out_path, camsel::ensemble_to_csv(ensemble));
  return 0;
}

int run_feasible_region(double a_min, double a_max, int points,
                        const std::string& out_path) {
  if (!(a_min > 0.0) || !(a_max > a_min) || points < 2) {
    throw camsel::OutOfDomain("need 0 < a-min < a-max and points >= 2");
  }
  std::string out = "a,auc,d,asymptote_auc\n";
  char buf[256];
  const double step = (std::log(a_max) - std::log(a_min)) / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double a = std::exp(std::log(a_min) + i * step);
    const camsel::FeasiblePoint p = camsel::feasible_region_curve(a);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", a, p.auc,
                  p.d, 1.0 - std::exp(-p.d - 1.0));
    out += buf;
  }
  emit(out_path, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covariance-selection quality analysis"};
  app.require_subcommand(1);

  std::string matrix_path, tree_path, out_path, format = "json";
  std::string family = "toeplitz-star";
  bool use_chow_liu = false, normalize = false, enumerate = false;
  long long mc_samples = 0, tree_samples = 1000;
  std::uint64_t seed = 1;
  int n_min = 5, n_max = 60, runs = 1, grid_points = 50;
  double rho = 0.5, sigma_kernel = 1.0, a_min = 1e-6, a_max = 100.0;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Quality report for a matrix and a tree model");
  analyze->add_option("matrix", matrix_path, "Matrix CSV file")->required();
  analyze->add_option("tree", tree_path, "Edge-list file (u,v per line)");
  analyze->add_flag("--chow-liu", use_chow_liu,
                    "Use the Chow-Liu tree instead of a tree file");
  analyze->add_flag("--normalize", normalize,
                    "Rescale a covariance input to correlation form");
  analyze->add_option("--mc", mc_samples, "Monte Carlo cross-check samples");
  analyze->add_option("--seed", seed, "RNG seed");
  analyze->add_option("--out", out_path, "Output path (default stdout)");
  analyze->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* sweep =
      app.add_subcommand("sweep", "Model-family sweep over dimension");
  sweep->add_option("--family", family, "Model family")
      ->check(CLI::IsMember({"toeplitz-star", "toeplitz-chain", "kernel-2d"}));
  sweep->add_option("--n-min", n_min, "Smallest dimension");
  sweep->add_option("--n-max", n_max, "Largest dimension");
  sweep->add_option("--rho", rho, "Equicorrelation coefficient");
  sweep->add_option("--sigma", sigma_kernel, "Kernel bandwidth");
  sweep->add_option("--runs", runs, "Random layouts per n (kernel-2d)");
  sweep->add_option("--seed", seed, "RNG seed");
  sweep->add_option("--out", out_path, "Output path (default stdout)");

  CLI::App* trees =
      app.add_subcommand("trees", "Spanning-tree ensemble metrics");
  trees->add_option("matrix", matrix_path, "Matrix CSV file")->required();
  trees->add_flag("--normalize", normalize,
                  "Rescale a covariance input to correlation form");
  trees->add_option("--samples", tree_samples, "Uniform random trees to draw");
  trees->add_flag("--enumerate", enumerate,
                  "All spanning trees (n <= 8) instead of sampling");
  trees->add_option("--seed", seed, "RNG seed");
  trees->add_option("--out", out_path, "Output path (default stdout)");

  CLI::App* feas = app.add_subcommand(
      "feasible-region", "(AUC, KL) feasible-region boundary");
  feas->add_option("--a-min", a_min, "Smallest boundary parameter");
  feas->add_option("--a-max", a_max, "Largest boundary parameter");
  feas->add_option("--points", grid_points, "Grid size (log-spaced)");
  feas->add_option("--out", out_path, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      if (!use_chow_liu && tree_path.empty()) {
        std::cerr << "error: provide a tree file or --chow-liu\n";
        return 2;
      }
      return run_analyze(matrix_path, tree_path, use_chow_liu, normalize,
                         mc_samples, seed, out_path, format);
    }
    if (sweep->parsed()) {
      return run_sweep(family, n_min, n_max, rho, sigma_kernel, runs, seed,
                       out_path);
    }
    if (trees->parsed()) {
      return run_trees(matrix_path, normalize, tree_samples, enumerate, seed,
                       out_path);
    }
    if (feas->parsed()) {
      return run_feasible_region(a_min, a_max, grid_points, out_path);
    }
  } catch (const camsel::QuadratureNonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const camsel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
