#include "camsel/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace camsel {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  int depth;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate(const std::function<double(double)>& f, double a, double b,
               int depth) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double x = h * kXgk[i];
    const double fsum = f(c - x) + f(c + x);
    resk += kWgk[i] * fsum;
    if (i % 2 == 1) resg += kWg[i / 2] * fsum;
  }
  return {a, b, resk * h, std::abs((resk - resg) * h), depth};
}

}  // namespace

double adaptive_gk(const std::function<double(double)>& f, double a, double b,
                   const QuadratureConfig& cfg) {
  if (!(b > a)) return 0.0;

  std::priority_queue<Panel> queue;
  queue.push(evaluate(f, a, b, 0));
  double total_value = queue.top().value;
  double total_error = queue.top().error;

  const long max_iters = 400'000;
  for (long it = 0; it < max_iters; ++it) {
    const double target =
        std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total_value));
    if (total_error <= target) return total_value;

    Panel worst = queue.top();
    queue.pop();
    if (worst.depth >= cfg.max_halvings) {
      throw QuadratureNonConvergence(
          "max halvings reached with error " + std::to_string(total_error));
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate(f, worst.a, mid, worst.depth + 1);
    Panel right = evaluate(f, mid, worst.b, worst.depth + 1);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  throw QuadratureNonConvergence("refinement budget exhausted");
}

}  // namespace camsel
