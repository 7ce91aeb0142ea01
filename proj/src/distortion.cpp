#include "udisc/distortion.hpp"

#include <algorithm>
#include <cmath>

#include "udisc/integrate.hpp"
#include "udisc/operators.hpp"

namespace udisc {

double Envelope::operator()(double t) const {
  switch (kind) {
    case Kind::Rational:
      return B / (1.0 - t * t);
    case Kind::LogPower:
      return C / (1.0 - t * t) *
             std::pow(std::log(std::exp(1.0) / (1.0 - t)), -(1.0 + eps));
    case Kind::Sum: {
      double s = 0.0;
      for (const Envelope& k : kids) s += k(t);
      return s;
    }
    case Kind::Tabulated: {
      if (table.empty()) return 0.0;
      if (t <= table.front().first) return table.front().second;
      if (t >= table.back().first) return table.back().second;
      auto it = std::lower_bound(
          table.begin(), table.end(), t,
          [](const auto& row, double x) { return row.first < x; });
      const auto [t1, v1] = *it;
      const auto [t0, v0] = *(it - 1);
      const double s = (t - t0) / (t1 - t0);
      return v0 + s * (v1 - v0);
    }
  }
  return 0.0;
}

Envelope Envelope::rational(double B, double R) {
  Envelope e;
  e.kind = Kind::Rational;
  e.B = B;
  e.R = R;
  return e;
}

Envelope Envelope::log_power(double C, double eps, double R) {
  Envelope e;
  e.kind = Kind::LogPower;
  e.C = C;
  e.eps = eps;
  e.R = R;
  return e;
}

Envelope Envelope::sum_of(Envelope a, Envelope b) {
  Envelope e;
  e.kind = Kind::Sum;
  e.R = std::max(a.R, b.R);
  e.kids = {std::move(a), std::move(b)};
  return e;
}

Envelope Envelope::tabulated(std::vector<std::pair<double, double>> pts) {
  Envelope e;
  e.kind = Kind::Tabulated;
  std::sort(pts.begin(), pts.end());
  e.R = pts.empty() ? 0.0 : pts.front().first;
  e.table = std::move(pts);
  return e;
}

double envelope_integral(const Envelope& env, double r) {
  if (r <= env.R) return 0.0;
  const QuadResult q = integrate_segment(
      [&](cx z) { return cx{env(z.real()), 0.0}; }, cx{env.R, 0.0},
      cx{r, 0.0}, 1e-11);
  return q.value.real();
}

ConditionIEstimate condition_i_estimate(const Envelope& env, int max_k) {
  ConditionIEstimate est;
  double acc = 0.0;
  double prev_r = env.R;
  for (int k = 1; k <= max_k; ++k) {
    const double r = 1.0 - std::pow(2.0, -k);
    if (r <= prev_r) continue;
    const QuadResult q = integrate_segment(
        [&](cx z) { return cx{env(z.real()), 0.0}; }, cx{prev_r, 0.0},
        cx{r, 0.0}, 1e-11);
    acc += q.value.real();
    prev_r = r;
    est.ladder.emplace_back(r, (1.0 - r) * std::exp(acc));
  }
  const std::size_t n = est.ladder.size();
  const std::size_t tail = (n + 2) / 3;
  std::vector<double> tv;
  for (std::size_t i = n - tail; i < n; ++i) tv.push_back(est.ladder[i].second);
  est.limsup_estimate = *std::max_element(tv.begin(), tv.end());
  std::vector<double> sorted = tv;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  bool nonincreasing = true;
  for (std::size_t i = 1; i < tv.size(); ++i)
    if (tv[i] > tv[i - 1] * (1.0 + 1e-12)) nonincreasing = false;
  est.finite = std::isfinite(est.limsup_estimate) &&
               (est.limsup_estimate < 10.0 * median || nonincreasing);
  return est;
}

ConditionIIResult condition_ii_integral(const Envelope& env, double tol) {
  ConditionIIResult res;
  const double cap = 1e12;
  const int max_panels = 48;
  double inner = 0.0;  // ∫_R^{s_k} phi
  double s_prev = env.R;
  std::vector<double> panel_sums;
  for (int k = 1; k <= max_panels; ++k) {
    const double s_next = 1.0 - (1.0 - env.R) * std::pow(2.0, -k);
    // exp(∫_R^s phi) over the panel; the inner integral is continued from the
    // panel edge.
    const double inner_base = inner;
    const QuadResult q = integrate_segment(
        [&](cx z) {
          const double s = z.real();
          const QuadResult qi = integrate_segment(
              [&](cx t) { return cx{env(t.real()), 0.0}; }, cx{s_prev, 0.0},
              cx{s, 0.0}, 1e-11);
          return cx{std::exp(inner_base + qi.value.real()), 0.0};
        },
        cx{s_prev, 0.0}, cx{s_next, 0.0}, 1e-10);
    const QuadResult qe = integrate_segment(
        [&](cx t) { return cx{env(t.real()), 0.0}; }, cx{s_prev, 0.0},
        cx{s_next, 0.0}, 1e-11);
    inner += qe.value.real();
    s_prev = s_next;
    panel_sums.push_back(q.value.real());
    res.partial_sum += q.value.real();
    res.panels = k;

    if (res.partial_sum > cap) {
      res.status = ConditionIIResult::Status::Divergent;
      return res;
    }
    if (panel_sums.size() >= 8) {
      bool nondecaying = true;
      for (std::size_t i = panel_sums.size() - 8; i + 1 < panel_sums.size(); ++i)
        if (panel_sums[i + 1] < 0.98 * panel_sums[i]) nondecaying = false;
      if (nondecaying) {
        res.status = ConditionIIResult::Status::Divergent;
        return res;
      }
    }
    if (panel_sums.size() >= 4) {
      double rho = 0.0;
      for (std::size_t i = panel_sums.size() - 3; i < panel_sums.size(); ++i)
        rho = std::max(rho, panel_sums[i] / panel_sums[i - 1]);
      if (rho < 0.95) {
        const double tail_est = panel_sums.back() * rho / (1.0 - rho);
        if (tail_est < tol) {
          res.status = ConditionIIResult::Status::Convergent;
          res.value = res.partial_sum + tail_est;
          return res;
        }
      }
    }
  }
  return res;
}

GrowthBoundReport growth_bound_check(const MapExpr& expr, const Envelope& env,
                                     cx zeta, double rho,
                                     const std::vector<double>& r_list) {
  GrowthBoundReport rep;
  const cx dir = zeta / std::abs(zeta);
  auto p = abs_pre_schwarzian_field(expr);

  const double r_max =
      r_list.empty() ? rho : *std::max_element(r_list.begin(), r_list.end());
  // Ray hypothesis check |P(f)(t dir)| <= phi(t).
  const int grid = 2048;
  for (int i = 0; i <= grid; ++i) {
    const double t = std::max(env.R, rho) +
                     (r_max - std::max(env.R, rho)) * i / static_cast<double>(grid);
    if (t >= 1.0) break;
    const cx z = t * dir;
    if (p(z) > env(t) * (1.0 + 1e-9) + 1e-12)
      throw HypothesisError("|P(f)| exceeds the envelope on the ray", z);
  }
  rep.hypothesis_ok = true;

  const MapExpr dexpr = expr.derivative();
  const cx f_rho = expr.jet(rho * dir).f;
  const double df_rho = std::abs(dexpr.jet_at(rho * dir).f);

  // Circle maxima M(rho, f), M(rho, f').
  double m_f = 0.0, m_df = 0.0;
  const int circ = 512;
  for (int i = 0; i < circ; ++i) {
    const cx z = std::polar(rho, 2.0 * kPi * i / static_cast<double>(circ));
    m_f = std::max(m_f, std::abs(expr.jet(z).f));
    m_df = std::max(m_df, std::abs(dexpr.jet_at(z).f));
  }
  (void)f_rho;

  rep.all_ok = true;
  for (double r : r_list) {
    GrowthBoundRow row;
    row.r = r;
    const cx z = r * dir;
    const QuadResult qphi = integrate_segment(
        [&](cx t) { return cx{env(t.real()), 0.0}; }, cx{rho, 0.0}, cx{r, 0.0},
        1e-11);
    row.deriv_lhs = std::abs(dexpr.jet_at(z).f);
    row.deriv_rhs = df_rho * std::exp(qphi.value.real());
    row.deriv_ok = row.deriv_lhs <= row.deriv_rhs * (1.0 + 1e-9);

    const QuadResult qgrow = integrate_segment(
        [&](cx s) {
          const QuadResult qi = integrate_segment(
              [&](cx t) { return cx{env(t.real()), 0.0}; }, cx{rho, 0.0},
              cx{s.real(), 0.0}, 1e-11);
          return cx{std::exp(qi.value.real()), 0.0};
        },
        cx{rho, 0.0}, cx{r, 0.0}, 1e-9);
    row.value_lhs = std::abs(expr.jet(z).f);
    row.value_rhs = m_f + m_df * qgrow.value.real();
    row.value_ok = row.value_lhs <= row.value_rhs * (1.0 + 1e-9);

    rep.all_ok = rep.all_ok && row.deriv_ok && row.value_ok;
    rep.rows.push_back(row);
  }
  return rep;
}

const char* condition_ii_status_name(ConditionIIResult::Status s) {
  switch (s) {
    case ConditionIIResult::Status::Convergent: return "convergent";
    case ConditionIIResult::Status::Divergent: return "divergent";
    case ConditionIIResult::Status::Indeterminate: return "indeterminate";
  }
  return "?";
}

}  // namespace udisc
