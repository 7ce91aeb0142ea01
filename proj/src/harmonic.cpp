#include "udisc/harmonic.hpp"

#include <atomic>
#include <cmath>
#include <limits>

namespace udisc {

HarmonicMap::HarmonicMap(MapExpr h, MapExpr g) : h_(std::move(h)), g_(std::move(g)) {
  // Structural constant-dilatation detection: g = c * h gives omega == c with
  // omega', omega'' identically zero.
  if (g_.kind() == ExprKind::Scale && g_.node().kids[0].same_node(h_))
    const_omega_ = g_.node().a;
  if (g_.kind() == ExprKind::Constant) const_omega_ = cx{0.0, 0.0};

  // Normalize g(0) = 0.
  const cx g0 = g_.jet(cx{0.0, 0.0}).f;
  if (g0 != cx{0.0, 0.0}) g_ = sum(g_, constant(-g0));
  dh_ = h_.derivative();
  dg_ = g_.derivative();
}

Jet2 HarmonicMap::dilatation_jet(cx z) const {
  if (const_omega_) return {*const_omega_, cx{}, cx{}};
  const Jet2 a = dg_.jet_at(z);
  const Jet2 b = dh_.jet_at(z);
  if (std::abs(b.f) < kCriticalThreshold)
    throw CriticalPointError("h' vanishes (critical point)", z);
  return a / b;
}

cx dilatation(const HarmonicMap& f, cx z) { return f.dilatation_jet(z).f; }

double jacobian(const HarmonicMap& f, cx z) {
  const cx dh = f.h().derivative().jet_at(z).f;
  const cx dg = f.g().derivative().jet_at(z).f;
  return std::norm(dh) - std::norm(dg);
}

namespace {

struct HarmonicPointData {
  DerivJet dh;   // h', h'', h'''
  Jet2 omega;    // w, w', w''
};

HarmonicPointData point_data(const HarmonicMap& f, cx z) {
  HarmonicPointData d;
  d.dh = deriv_jet(f.h(), z);
  if (std::abs(d.dh.f1) < kCriticalThreshold)
    throw CriticalPointError("h' vanishes (critical point)", z);
  d.omega = f.dilatation_jet(z);
  if (std::abs(d.omega.f) >= 1.0)
    throw HypothesisError("dilatation leaves the disc (J_f <= 0)", z);
  return d;
}

cx analytic_p(const DerivJet& d) { return d.f2 / d.f1; }

cx analytic_s(const DerivJet& d) {
  const cx p = d.f2 / d.f1;
  const cx dp = (d.f3 * d.f1 - d.f2 * d.f2) / (d.f1 * d.f1);
  return dp - 0.5 * p * p;
}

}  // namespace

cx harmonic_pre_schwarzian(const HarmonicMap& f, cx z) {
  const HarmonicPointData d = point_data(f, z);
  const cx wbar = std::conj(d.omega.f);
  return analytic_p(d.dh) - wbar * d.omega.df / (1.0 - std::norm(d.omega.f));
}

cx harmonic_schwarzian(const HarmonicMap& f, cx z) {
  const HarmonicPointData d = point_data(f, z);
  const cx wbar = std::conj(d.omega.f);
  const double den = 1.0 - std::norm(d.omega.f);
  const cx ph = analytic_p(d.dh);
  const cx t2 = (wbar / den) * (ph * d.omega.df - d.omega.d2f);
  const cx u = wbar * d.omega.df / den;
  return analytic_s(d.dh) + t2 - 1.5 * u * u;
}

double harmonic_becker_quantity(const HarmonicMap& f, cx z) {
  const HarmonicPointData d = point_data(f, z);
  const double w2 = 1.0 - std::norm(z);
  const cx wbar = std::conj(d.omega.f);
  const double den = 1.0 - std::norm(d.omega.f);
  const cx ph = analytic_p(d.dh) - wbar * d.omega.df / den;
  return std::abs(ph) * w2 + std::abs(d.omega.df) * w2 / den;
}

HarmonicBeckerReport harmonic_becker_verdict(const HarmonicMap& f,
                                             const Region& region, double tol,
                                             const GridSpec& spec) {
  HarmonicBeckerReport out;
  // Degenerate (J_f <= 0) samples surface as infinite quantities inside the
  // scan and are tallied on the side.
  std::atomic<std::size_t> degenerate{0};
  const ScanMax scan = scan_region_max(
      [&](cx z) {
        try {
          return harmonic_becker_quantity(f, z);
        } catch (const HypothesisError&) {
          degenerate.fetch_add(1, std::memory_order_relaxed);
          return std::numeric_limits<double>::infinity();
        }
      },
      region, spec);
  out.degenerate_points = degenerate.load();
  out.report.criterion_id = "harmonic-becker";
  out.report.region = region;
  out.report.worst_point = scan.argmax;
  out.report.worst_margin = 1.0 - scan.value;
  out.report.samples_evaluated = scan.samples;
  out.report.holds = out.report.worst_margin >= -tol;
  if (!std::isfinite(scan.value)) out.first_degenerate = scan.argmax;
  return out;
}

double separation_bound(const SeparationQuery& q) {
  const cx xi = hyperbolic_midpoint(q.z1, q.z2);
  const double s = 1.0 - std::abs(xi);
  if (!(s < 1.0 / q.C))
    throw HypothesisError("midpoint condition 1-|xi| < 1/C fails", xi);
  const double root = std::sqrt(q.C * s);
  return std::log((2.0 - root) / root);
}

bool separation_check(const HarmonicMap& f, const SeparationQuery& q) {
  (void)f;  // the map enters through the caller's f(z1) = f(z2) assertion
  return hyperbolic_distance(q.z1, q.z2) >= separation_bound(q);
}

SeparationHypothesisReport harmonic_separation_hypothesis(
    const HarmonicMap& f, double C, double delta0, double exponent,
    const GridSpec& spec) {
  SeparationHypothesisReport rep;
  rep.delta0 = delta0;
  rep.exponent = exponent;
  const ScanMax scan = scan_region_max(
      [&](cx z) {
        const double w = std::pow(1.0 - std::norm(z), exponent);
        const double bound = delta0 * (1.0 + C * (1.0 - std::abs(z)));
        return std::abs(harmonic_schwarzian(f, z)) * w - bound;
      },
      Region::whole_disc(), spec);
  rep.worst_quantity = scan.value;
  rep.worst_point = scan.argmax;
  rep.samples = scan.samples;
  rep.holds = scan.value <= 0.0;
  return rep;
}

OmegaMapReport omega_map_check(const HarmonicMap& f, cx z0,
                               const std::vector<cx>& samples) {
  OmegaMapReport rep;
  const cx h0 = f.h().jet(z0).f;
  const cx g0 = f.g().jet(z0).f;
  for (cx z : samples) {
    if (std::abs(z - z0) < 1e-6) continue;  // removable singularity
    const cx hz = f.h().jet(z).f;
    if (std::abs(hz - h0) < 1e-300) continue;
    const double v = std::abs((f.g().jet(z).f - g0) / (hz - h0));
    ++rep.samples;
    if (v > rep.max_abs) {
      rep.max_abs = v;
      rep.worst_point = z;
    }
  }
  rep.hypothesis_falsified = rep.max_abs >= 1.0;
  return rep;
}

}  // namespace udisc
