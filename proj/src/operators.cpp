#include "udisc/operators.hpp"

#include <algorithm>
#include <cmath>

namespace udisc {

DerivJet deriv_jet(const MapExpr& expr, cx z) {
  const Jet2 j = expr.derivative().jet_at(z);
  return {j.f, j.df, j.d2f};
}

namespace {

void require_noncritical(const DerivJet& d, cx z) {
  if (std::abs(d.f1) < kCriticalThreshold)
    throw CriticalPointError("f' vanishes (critical point)", z);
}

cx pre_schwarzian_from(const DerivJet& d) { return d.f2 / d.f1; }

cx schwarzian_from(const DerivJet& d) {
  const cx p = d.f2 / d.f1;
  const cx dp = (d.f3 * d.f1 - d.f2 * d.f2) / (d.f1 * d.f1);
  return dp - 0.5 * p * p;
}

double weight(double p, cx z) { return std::pow(1.0 - std::norm(z), p); }

}  // namespace

cx pre_schwarzian(const MapExpr& expr, cx z) {
  const DerivJet d = deriv_jet(expr, z);
  require_noncritical(d, z);
  return pre_schwarzian_from(d);
}

cx schwarzian(const MapExpr& expr, cx z) {
  const DerivJet d = deriv_jet(expr, z);
  require_noncritical(d, z);
  return schwarzian_from(d);
}

double spherical_derivative(const MapExpr& expr, cx z) {
  const Jet2 j = expr.jet(z);
  return std::abs(j.df) / (1.0 + std::norm(j.f));
}

double becker_quantity(const MapExpr& expr, cx z) {
  return std::abs(z * pre_schwarzian(expr, z)) * (1.0 - std::norm(z));
}

double becker_quantity_z(const MapExpr& expr, cx z) {
  return std::abs(pre_schwarzian(expr, z)) * (1.0 - std::norm(z));
}

double nehari_quantity(const MapExpr& expr, cx z) {
  const double w = 1.0 - std::norm(z);
  return std::abs(schwarzian(expr, z)) * w * w;
}

double hv_margin(const MapExpr& expr, double C, cx z) {
  return 1.0 + C * (1.0 - std::abs(z)) -
         std::abs(pre_schwarzian(expr, z)) * (1.0 - std::norm(z));
}

std::function<double(cx)> abs_pre_schwarzian_field(const MapExpr& expr) {
  const MapExpr d1 = expr.derivative();
  return [d1](cx z) {
    const Jet2 j = d1.jet_at(z);
    if (std::abs(j.f) < kCriticalThreshold)
      throw CriticalPointError("f' vanishes (critical point)", z);
    return std::abs(j.df / j.f);
  };
}

std::function<double(cx)> abs_schwarzian_field(const MapExpr& expr) {
  const MapExpr d1 = expr.derivative();
  return [d1](cx z) {
    const Jet2 j = d1.jet_at(z);
    if (std::abs(j.f) < kCriticalThreshold)
      throw CriticalPointError("f' vanishes (critical point)", z);
    return std::abs(schwarzian_from(DerivJet{j.f, j.df, j.d2f}));
  };
}

std::function<double(cx)> abs_derivative_field(const MapExpr& expr) {
  const MapExpr d1 = expr.derivative();
  return [d1](cx z) { return std::abs(d1.jet_at(z).f); };
}

// ---------------------------------------------------------------------------
// Weighted sup norm over a layered polar grid.
//
// Radius ladder r_k = 1 - 2^{-k} capped at r_cap; angular count grows like
// (1-r)^{-1/2} because the suprema of the target fields live near the
// boundary.  The reduction runs in fixed ladder order so results do not
// depend on the worker count.

namespace {

struct RingScan {
  double sup = 0.0;
  cx arg{};
};

RingScan scan_ring(const std::function<double(cx)>& absfield, double p,
                   double r, std::size_t m, par::Mode mode) {
  std::vector<double> vals(m);
  const double w = weight(p, cx{r, 0.0});
  par::for_indices(m, mode, [&](std::size_t i) {
    const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(m);
    vals[i] = absfield(std::polar(r, t)) * w;
  });
  RingScan out;
  std::size_t best = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (vals[i] > out.sup) {
      out.sup = vals[i];
      best = i;
    }
  out.arg = std::polar(r, 2.0 * kPi * static_cast<double>(best) / static_cast<double>(m));
  return out;
}

// One golden-section pass along a coordinate.
template <class F>
double golden_max(const F& f, double lo, double hi, int iters, double& best_x) {
  const double phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  if (f1 >= f2) {
    best_x = x1;
    return f1;
  }
  best_x = x2;
  return f2;
}

}  // namespace

NormEstimate weighted_sup_norm(const std::function<double(cx)>& absfield,
                               double p, const SupNormOptions& opt) {
  NormEstimate est;
  est.value = absfield(cx{0.0, 0.0}) * weight(p, cx{0.0, 0.0});
  est.argmax = cx{0.0, 0.0};
  est.samples = 1;

  double prev_change = 1.0, change = 1.0;
  double last_r = 0.0;
  for (int k = 1; k <= opt.max_k; ++k) {
    double r = 1.0 - std::pow(2.0, -k);
    if (r > opt.r_cap) r = opt.r_cap;
    if (r <= last_r) break;
    last_r = r;
    const std::size_t m = static_cast<std::size_t>(
        std::ceil(2.0 * kPi / std::sqrt(1.0 - r) * opt.angular_factor));
    const RingScan ring = scan_ring(absfield, p, r, m, opt.mode);
    est.samples += m;
    est.ladder.emplace_back(r, ring.sup);
    const double before = est.value;
    if (ring.sup > est.value) {
      est.value = ring.sup;
      est.argmax = ring.arg;
    }
    prev_change = change;
    change = (est.value > 0.0) ? (est.value - before) / est.value : 0.0;
    if (k >= 3 && prev_change < opt.tol && change < opt.tol) {
      est.converged = true;
      break;
    }
    if (r == opt.r_cap) {
      est.converged = prev_change < opt.tol && change < opt.tol;
      break;
    }
  }

  // Local polish around the best point, radius clamped at the cap.
  double rb = std::abs(est.argmax), tb = std::arg(est.argmax);
  if (rb > 0.0) {
    const double dr0 = std::min(1.0 - rb, 0.5 * (1.0 - rb) + 1e-9);
    double dt = std::sqrt(1.0 - rb) / (opt.angular_factor * 4.0);
    double dr = std::min(dr0, rb * 0.5);
    for (int round = 0; round < opt.polish_rounds; ++round) {
      auto along_t = [&](double t) { return absfield(std::polar(rb, t)) * weight(p, cx{rb, 0.0}); };
      double t_new = tb;
      golden_max(along_t, tb - dt, tb + dt, 24, t_new);
      tb = t_new;
      auto along_r = [&](double r) {
        return absfield(std::polar(r, tb)) * weight(p, cx{r, 0.0});
      };
      const double r_lo = std::max(0.0, rb - dr);
      const double r_hi = std::min(opt.r_cap, rb + dr);
      double r_new = rb;
      const double v = golden_max(along_r, r_lo, r_hi, 24, r_new);
      rb = r_new;
      est.samples += 96;
      if (v > est.value) {
        est.value = v;
        est.argmax = std::polar(rb, tb);
      }
      dt *= 0.25;
      dr *= 0.25;
    }
  }
  return est;
}

NormInequalityReport norm_inequality_report(const MapExpr& expr,
                                            const SupNormOptions& opt) {
  NormInequalityReport rep;
  rep.pre_schwarzian_norm = weighted_sup_norm(abs_pre_schwarzian_field(expr), 1.0, opt);
  rep.schwarzian_norm = weighted_sup_norm(abs_schwarzian_field(expr), 2.0, opt);
  const double np = rep.pre_schwarzian_norm.value;
  const double ns = rep.schwarzian_norm.value;
  rep.forward_lhs = ns;
  rep.forward_rhs = 4.0 * np + 0.5 * np * np;
  rep.converse_lhs = np;
  rep.converse_rhs = 2.0 + 2.0 * std::sqrt(1.0 + 0.5 * ns);
  const double slack = 1e-9;
  rep.forward_holds = rep.forward_lhs <= rep.forward_rhs + slack;
  rep.converse_holds = rep.converse_lhs <= rep.converse_rhs + slack;
  return rep;
}

NormEstimate bloch_norm(const MapExpr& expr, const SupNormOptions& opt) {
  return weighted_sup_norm(abs_derivative_field(expr), 1.0, opt);
}

NormEstimate normal_norm(const MapExpr& expr, const SupNormOptions& opt) {
  return weighted_sup_norm(
      [expr](cx z) { return spherical_derivative(expr, z); }, 1.0, opt);
}

}  // namespace udisc
