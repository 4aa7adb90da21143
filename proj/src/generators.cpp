#include "camsel/generators.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace camsel {

namespace {

void check_equicorrelation_domain(int n, double rho) {
  if (n < 2) throw OutOfDomain("n must be at least 2");
  if (!(std::abs(rho) < 1.0) || !(rho > -1.0 / (n - 1))) {
    throw OutOfDomain("rho outside (-1/(n-1), 1)");
  }
}

}  // namespace

CorrelationMatrix toeplitz_equicorrelation(int n, double rho) {
  check_equicorrelation_domain(n, rho);
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, rho);
  m.diagonal().setOnes();
  return validate_correlation(std::move(m));
}

ModelCovariance star_model(int n, double rho) {
  check_equicorrelation_domain(n, rho);
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, rho * rho);
  m.row(0).setConstant(rho);
  m.col(0).setConstant(rho);
  m.diagonal().setOnes();

  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  std::vector<double> step_logdets(n);
  for (int k = 0; k < n; ++k) {
    step_logdets[k] = k * std::log1p(-rho * rho);
  }
  return ModelCovariance{std::move(m), EdgeSet(n, std::move(edges)),
                         std::move(step_logdets)};
}

ModelCovariance chain_model(int n, double rho) {
  check_equicorrelation_domain(n, rho);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = std::pow(rho, std::abs(i - j));
  }

  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  std::vector<double> step_logdets(n);
  for (int k = 0; k < n; ++k) {
    step_logdets[k] = k * std::log1p(-rho * rho);
  }
  return ModelCovariance{std::move(m), EdgeSet(n, std::move(edges)),
                         std::move(step_logdets)};
}

CorrelationMatrix kernel_network(const SensorLayout& layout) {
  const int n = layout.size();
  if (n < 2) throw OutOfDomain("need at least 2 sensors");
  if (!(layout.sigma_kernel > 0.0)) {
    throw OutOfDomain("kernel bandwidth must be positive");
  }
  for (const auto& [x, y] : layout.coords) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw OutOfDomain("non-finite sensor coordinate");
    }
  }
  const double inv2s2 =
      1.0 / (2.0 * layout.sigma_kernel * layout.sigma_kernel);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      const double dx = layout.coords[i].first - layout.coords[j].first;
      const double dy = layout.coords[i].second - layout.coords[j].second;
      m(i, j) = m(j, i) = std::exp(-(dx * dx + dy * dy) * inv2s2);
    }
  }
  try {
    return validate_correlation(std::move(m));
  } catch (const NotPositiveDefinite&) {
    throw NotPositiveDefinite(
        "kernel matrix not positive definite (coincident or "
        "near-coincident sensors)");
  }
}

SensorLayout random_layout(int n, double sigma_kernel, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SensorLayout layout;
  layout.sigma_kernel = sigma_kernel;
  layout.coords.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x = normal(rng);
    const double y = normal(rng);
    layout.coords.emplace_back(x, y);
  }
  return layout;
}

CorrelationMatrix parse_matrix_csv(const std::string& text, bool normalize) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // Skip blank (whitespace-only) lines.
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        while (used < cell.size() &&
               (cell[used] == ' ' || cell[used] == '\t' || cell[used] == '\r')) {
          ++used;
        }
        if (used != cell.size()) throw std::invalid_argument("trailing");
        row.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) +
                         ": non-numeric cell '" + cell + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(rows.front().size()) +
                       " columns, found " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no matrix rows found");
  const int n = static_cast<int>(rows.size());
  if (static_cast<int>(rows.front().size()) != n) {
    throw ParseError("matrix is " + std::to_string(n) + "x" +
                     std::to_string(rows.front().size()) + ", must be square");
  }

  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  if (normalize) {
    Eigen::ArrayXd d = m.diagonal().array();
    if ((d <= 0.0).any()) {
      throw BadDiagonal("cannot normalize: non-positive diagonal entry");
    }
    const Eigen::ArrayXd s = d.sqrt().inverse();
    m = s.matrix().asDiagonal() * m * s.matrix().asDiagonal();
    m.diagonal().setOnes();
  }
  return validate_correlation(std::move(m));
}

CorrelationMatrix load_matrix_csv(const std::string& path, bool normalize) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_csv(buf.str(), normalize);
}

std::string matrix_to_csv(const Eigen::MatrixXd& m) {
  std::string out;
  char cell[40];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(cell, sizeof cell, "%.17g", m(i, j));
      out += cell;
      out += (j + 1 < m.cols()) ? ',' : '\n';
    }
  }
  return out;
}

void save_matrix_csv(const std::string& path, const Eigen::MatrixXd& m) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << matrix_to_csv(m);
}

}  // namespace camsel
