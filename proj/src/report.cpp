#include "camsel/report.hpp"

#include <json.hpp>

#include "camsel/spectral_auc.hpp"

namespace camsel {

QualityReport quality_report(const CamSpectrum& s) {
  const DivergenceSet d = divergences_from_spectrum(s);
  const BoundReport b = bound_report(s, d);

  QualityReport r;
  r.n = s.dim();
  r.kl = d.kl;
  r.reverse_kl = d.reverse_kl;
  r.jeffreys = d.jeffreys;
  r.auc = auc_exact(s);
  r.auc_lower = b.lower;
  r.auc_upper = b.upper;
  r.auc_lower_asymptotic = b.lower_asymptotic;
  r.auc_upper_asymptotic = b.upper_asymptotic;
  r.d_star = b.d_star;
  r.lambdas = s.lambdas;
  r.alphas = s.alphas;
  return r;
}

std::string report_to_json(const QualityReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["kl"] = r.kl;
  j["reverse_kl"] = r.reverse_kl;
  j["jeffreys"] = r.jeffreys;
  j["auc"] = r.auc;
  j["auc_lower"] = r.auc_lower;
  j["auc_upper"] = r.auc_upper;
  j["auc_lower_asymptotic"] = r.auc_lower_asymptotic;
  j["auc_upper_asymptotic"] = r.auc_upper_asymptotic;
  j["d_star"] = r.d_star;
  j["lambdas"] = r.lambdas;
  j["alphas"] = r.alphas;
  if (r.mc_auc) j["mc_auc"] = *r.mc_auc;
  if (r.mc_se) j["mc_se"] = *r.mc_se;
  return j.dump(2);
}

std::string report_csv_header() {
  return "n,kl,reverse_kl,jeffreys,auc,auc_lower,auc_upper,"
         "auc_lower_asymptotic,auc_upper_asymptotic,d_star,mc_auc,mc_se";
}

std::string report_to_csv(const QualityReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g",
                r.n, r.kl, r.reverse_kl, r.jeffreys, r.auc, r.auc_lower,
                r.auc_upper, r.auc_lower_asymptotic, r.auc_upper_asymptotic,
                r.d_star);
  std::string out = buf;
  if (r.mc_auc && r.mc_se) {
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g", *r.mc_auc, *r.mc_se);
    out += buf;
  } else {
    out += ",,";
  }
  return out;
}

}  // namespace camsel
