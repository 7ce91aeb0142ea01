#include "udisc/integrate.hpp"

#include <cmath>
#include <vector>

namespace udisc {
namespace {

// Gauss 7 / Kronrod 15 nodes on [0,1] stored as (abscissa offset, Gauss w,
// Kronrod w); first row is the midpoint.
constexpr double kNodes[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

// One GK15 panel of ∫ g(path(s)) path'(s) ds over s in [a,b].
template <class PathFn, class SpeedFn>
cx gk15(const Integrand& g, const PathFn& path, const SpeedFn& speed,
        double a, double b, double& err) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  auto eval = [&](double s) { return g(path(s)) * speed(s); };

  cx y0 = eval(mid);
  cx g7 = kNodes[0][1] * y0;
  cx k15 = kNodes[0][2] * y0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kNodes[i][0];
    const cx yi = eval(mid + dx) + eval(mid - dx);
    g7 += kNodes[i][1] * yi;
    k15 += kNodes[i][2] * yi;
  }
  g7 *= half;
  k15 *= half;
  err = std::abs(g7 - k15);
  err = 200.0 * err * std::sqrt(err > 0 ? err : 0.0);
  return k15;
}

template <class PathFn, class SpeedFn>
QuadResult adaptive(const Integrand& g, const PathFn& path, const SpeedFn& speed,
                    double s0, double s1, double tol, int max_panels) {
  struct Interval {
    double a, b;
  };
  std::vector<Interval> stack{{s0, s1}};
  QuadResult out;
  cx sum{};
  double err_total = 0.0;
  int panels = 0;
  const double span = std::abs(s1 - s0);
  while (!stack.empty()) {
    const Interval iv = stack.back();
    stack.pop_back();
    double err = 0.0;
    const cx val = gk15(g, path, speed, iv.a, iv.b, err);
    ++panels;
    const double local_tol = tol * std::abs(iv.b - iv.a) / (span > 0 ? span : 1.0);
    const bool narrow = std::abs(iv.b - iv.a) < 1e-15 * span;
    if (err <= std::max(local_tol, 1e-300) || narrow) {
      sum += val;
      err_total += err;
      continue;
    }
    if (panels >= max_panels) {
      sum += val;
      err_total += err;
      continue;
    }
    const double m = 0.5 * (iv.a + iv.b);
    stack.push_back({iv.a, m});
    stack.push_back({m, iv.b});
  }
  out.value = sum;
  out.err_estimate = err_total;
  out.panels = panels;
  out.converged = err_total <= tol * 4.0 && panels < max_panels;
  return out;
}

}  // namespace

QuadResult integrate_segment(const Integrand& g, cx z0, cx z1, double tol,
                             int max_panels) {
  const cx dir = z1 - z0;
  if (dir == cx{0.0, 0.0}) return {cx{}, 0.0, 0, true};
  auto path = [&](double s) { return z0 + s * dir; };
  auto speed = [&](double) { return dir; };
  return adaptive(g, path, speed, 0.0, 1.0, tol, max_panels);
}

QuadResult integrate_arc(const Integrand& g, cx center, double radius,
                         double t0, double t1, double tol, int max_panels) {
  if (t0 == t1) return {cx{}, 0.0, 0, true};
  auto path = [&](double t) { return center + std::polar(radius, t); };
  auto speed = [&](double t) { return cx{0.0, 1.0} * std::polar(radius, t); };
  return adaptive(g, path, speed, t0, t1, tol, max_panels);
}

QuadResult integrate_polyline(const Integrand& g, const std::vector<cx>& pts,
                              double tol) {
  QuadResult total;
  total.converged = true;
  if (pts.size() < 2) return total;
  const double per_leg = tol / static_cast<double>(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const QuadResult leg = integrate_segment(g, pts[i], pts[i + 1], per_leg);
    total.value += leg.value;
    total.err_estimate += leg.err_estimate;
    total.panels += leg.panels;
    total.converged = total.converged && leg.converged;
  }
  return total;
}

}  // namespace udisc
