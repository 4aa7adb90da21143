#pragma once

#include <optional>
#include <string>
#include <vector>

#include "camsel/auc_bounds.hpp"
#include "camsel/divergences.hpp"
#include "camsel/matrix_core.hpp"

namespace camsel {

/// Full quality summary for one (Sigma_X, Sigma_M) pair.
struct QualityReport {
  int n = 0;
  double kl = 0.0;
  double reverse_kl = 0.0;
  double jeffreys = 0.0;
  double auc = 0.0;
  double auc_lower = 0.0;
  double auc_upper = 0.0;
  double auc_lower_asymptotic = 0.0;
  double auc_upper_asymptotic = 0.0;
  double d_star = 0.0;
  std::vector<double> lambdas;
  std::vector<double> alphas;
  std::optional<double> mc_auc;
  std::optional<double> mc_se;
};

/// Divergences, exact AUC and bounds for one spectrum.
QualityReport quality_report(const CamSpectrum& s);

/// JSON object with exactly the field names above (mc_* omitted if unset).
std::string report_to_json(const QualityReport& r);

/// Single CSV row (header available separately).
std::string report_csv_header();
std::string report_to_csv(const QualityReport& r);

}  // namespace camsel
