#include "udisc/experiments.hpp"

#include <cmath>
#include <sstream>

#include "udisc/distortion.hpp"
#include "udisc/harmonic.hpp"
#include "udisc/rng.hpp"
#include "udisc/univalence.hpp"
#include "udisc/valence.hpp"

namespace udisc {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

void note(ExperimentResult& r, const std::string& s) { r.lines.push_back(s); }

void check(ExperimentResult& r, bool ok, const std::string& s) {
  r.lines.push_back(std::string(ok ? "  ok   " : "  FAIL ") + s);
  r.pass = r.pass && ok;
}

}  // namespace

ExperimentResult run_sharp_bounds() {
  ExperimentResult r{"sharp-bounds", true, {}};
  for (int n : {1, 2, 3}) {
    const NormEstimate est =
        weighted_sup_norm(abs_pre_schwarzian_field(odd_poly(n)), 1.0);
    const double target = 4.0 * n;
    check(r, est.value >= target - 0.05 && est.value <= target + 1e-9,
          "(1-z)^{2n+1}, n=" + std::to_string(n) + ": sup |P|(1-|z|^2) = " +
              fmt(est.value) + " vs sharp bound " + fmt(target));
  }
  for (double p : {1.0, 3.0}) {
    const NormEstimate est =
        weighted_sup_norm(abs_pre_schwarzian_field(neg_power(p)), 1.0);
    const double target = 2.0 * (p + 1.0);
    check(r, est.value >= target - 0.05 && est.value <= target + 1e-9,
          "(1-z)^{-p}, p=" + fmt(p) + ": sup |P|(1-|z|^2) = " + fmt(est.value) +
              " vs sharp bound " + fmt(target));
  }
  return r;
}

ExperimentResult run_koebe_extremal() {
  ExperimentResult r{"koebe-extremal", true, {}};
  const MapExpr k = koebe();

  Rng rng(1903);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double x = rng.uniform(-0.999, 0.999);
    worst = std::max(worst, std::abs(nehari_quantity(k, cx{x, 0.0}) - 6.0));
  }
  check(r, worst < 1e-10,
        "|S(k)(x)|(1-x^2)^2 = 6 on the real axis, worst deviation " + fmt(worst));

  const NormInequalityReport rep = norm_inequality_report(k);
  check(r, rep.schwarzian_norm.value <= 6.0 + 1e-9,
        "grid sup of the Nehari quantity = " + fmt(rep.schwarzian_norm.value) +
            " <= 6 + 1e-9");
  check(r, std::abs(rep.pre_schwarzian_norm.value - 6.0) <= 1e-2,
        "||P(k)||_{H^inf_1} = " + fmt(rep.pre_schwarzian_norm.value) + " = 6 +- 1e-2");
  const double gap = rep.converse_rhs - rep.converse_lhs;
  check(r, rep.converse_holds && std::abs(gap) < 1e-2,
        "converse inequality ||P|| <= 2+2sqrt(1+||S||/2) with near-equality, gap = " +
            fmt(gap));
  check(r, rep.forward_holds,
        "forward inequality ||S|| <= 4||P|| + ||P||^2/2: " + fmt(rep.forward_lhs) +
            " <= " + fmt(rep.forward_rhs));
  return r;
}

namespace {

bool family_trace_simple(double C, cx zeta) {
  const MapExpr f = example_family(C, zeta);
  TraceOptions topt;
  // Coarse pre-pass to scale the chord tolerance.
  CircleValues cv(f, 1.0);
  cv.prefill();
  double lo = cv.cut() + topt.collar, hi = cv.cut() + 2.0 * kPi - topt.collar;
  double mnx = 1e300, mxx = -1e300, mny = 1e300, mxy = -1e300;
  for (int i = 0; i <= 2048; ++i) {
    const cx p = cv.value(lo + (hi - lo) * i / 2048.0);
    mnx = std::min(mnx, p.real());
    mxx = std::max(mxx, p.real());
    mny = std::min(mny, p.imag());
    mxy = std::max(mxy, p.imag());
  }
  const double tol = 1e-3 * std::hypot(mxx - mnx, mxy - mny);
  return is_simple(trace_boundary(f, tol, 1.0, topt)).simple;
}

}  // namespace

ExperimentResult run_critical_c() {
  ExperimentResult r{"critical-C", true, {}};
  const CriticalCResult cc = critical_C(cx{0.0, -1.0}, 0.01);
  check(r, !cc.predicate_noise && cc.value >= 2.16 && cc.value <= 2.26,
        "critical C for zeta=-i: " + fmt(cc.value) + " (bracket [" + fmt(cc.lo) +
            ", " + fmt(cc.hi) + "]), expected in [2.16, 2.26]");
  check(r, family_trace_simple(1.0, cx{0.0, -1.0}),
        "boundary curve simple at C=1, zeta=-i");
  check(r, !family_trace_simple(2.5, cx{0.0, -1.0}),
        "boundary curve not simple at C=2.5, zeta=-i");
  check(r, !family_trace_simple(6.5, cx{1.0, 0.0}),
        "boundary curve not simple at C=6.5, zeta=1");
  return r;
}

ExperimentResult run_valence_sweep() {
  ExperimentResult r{"valence-sweep", true, {}};
  const cx zeta{0.0, -1.0};
  const std::vector<double> cs{1.0, 2.5, 5.0, 10.0, 20.0, 30.0};
  const SlopeResult slope = valence_slope(zeta, cs);
  for (const auto& [C, v] : slope.per_C)
    note(r, "  C=" + fmt(C) + ": valence " + std::to_string(v));
  check(r, slope.per_C[0].second == 1, "valence(C=1) = 1");
  check(r, slope.per_C[1].second >= 2, "valence(C=2.5) >= 2");
  bool mono = true;
  for (std::size_t i = 1; i < slope.per_C.size(); ++i)
    mono = mono && slope.per_C[i].second >= slope.per_C[i - 1].second;
  check(r, mono, "valence non-decreasing over the C ladder");
  note(r, "  informational: least-squares slope " + fmt(slope.slope) +
              " vs 100/63 = " + fmt(100.0 / 63.0));
  return r;
}

ExperimentResult run_horodisc() {
  ExperimentResult r{"horodisc", true, {}};
  GridSpec dense;
  dense.max_k = 20;
  dense.angular_factor = 12.0;
  for (double C : {1.5, 2.0, 3.0, 5.0, 10.0, 50.0}) {
    const ScanMax m = lemma41_max(C, dense);
    check(r, m.value <= 1.0 + 1e-9,
          "lemma majorant max (C=" + fmt(C) + ") = " + fmt(m.value) + " <= 1");
  }
  const MapExpr f = example_family(3.0, cx{0.0, -1.0});
  const double a = 1.0 - std::pow(1.0 + 3.0, -2.0);
  for (double theta : {0.0, kPi / 2.0, kPi}) {
    const CriterionReport rep = horodisc_transform_check(f, 3.0, theta);
    check(r, rep.holds,
          "horodisc transform Becker quantity (theta=" + fmt(theta) + ") max = " +
              fmt(1.0 - rep.worst_margin) + " <= 1 + 1e-6");
    const CollisionReport col = injectivity_sample(
        f, Region::in_horodisc(theta, a), 10000, 20260810);
    check(r, !col.found,
          "no collision among 10^4 pairs in D(" + fmt(a) + " e^{i " + fmt(theta) +
              "}, " + fmt(1.0 - a) + ")");
  }
  return r;
}

ExperimentResult run_distortion_envelopes() {
  ExperimentResult r{"distortion-envelopes", true, {}};
  const Envelope r2 = Envelope::rational(2.0);
  const ConditionIEstimate c1 = condition_i_estimate(r2);
  check(r, c1.finite && std::abs(c1.limsup_estimate - 2.0) <= 1e-3,
        "condition (i) for 2/(1-t^2): tail " + fmt(c1.limsup_estimate) +
            " = 2 +- 1e-3, finite");
  const ConditionIIResult d2 = condition_ii_integral(r2);
  check(r, d2.status == ConditionIIResult::Status::Divergent,
        std::string("condition (ii) for 2/(1-t^2): ") +
            condition_ii_status_name(d2.status) + " (expected divergent)");
  const ConditionIIResult d1 = condition_ii_integral(Envelope::rational(1.0));
  check(r, d1.status == ConditionIIResult::Status::Convergent,
        std::string("condition (ii) for 1/(1-t^2): ") +
            condition_ii_status_name(d1.status) + ", value " + fmt(d1.value));
  const Envelope psi =
      Envelope::sum_of(Envelope::rational(1.0), Envelope::log_power(1.0, 0.5));
  const ConditionIIResult dpsi = condition_ii_integral(psi);
  check(r, dpsi.status == ConditionIIResult::Status::Convergent,
        std::string("condition (ii) for the psi envelope (B=1, C=1, eps=0.5): ") +
            condition_ii_status_name(dpsi.status) + ", value " + fmt(dpsi.value));
  return r;
}

ExperimentResult run_harmonic_reduction() {
  ExperimentResult r{"harmonic-reduction", true, {}};
  Rng rng(77);
  const std::vector<MapExpr> hs{koebe(), exp_map(),
                                polynomial({cx{0.0, 0.0}, cx{1.0, 0.0},
                                            cx{0.12, 0.08}, cx{0.0, -0.05}})};
  double worst = 0.0;
  for (const MapExpr& h : hs) {
    const HarmonicMap f(h, constant(cx{0.0, 0.0}));
    for (int i = 0; i < 34; ++i) {
      const cx z = rng.in_disc(cx{0.0, 0.0}, 0.9);
      worst = std::max(worst,
                       std::abs(harmonic_pre_schwarzian(f, z) - pre_schwarzian(h, z)));
      worst =
          std::max(worst, std::abs(harmonic_schwarzian(f, z) - schwarzian(h, z)));
    }
  }
  check(r, worst < 1e-12,
        "g == 0: harmonic P/S equal analytic P/S, worst |diff| = " + fmt(worst));

  // Constant dilatation g = c h collapses exactly.
  bool exact = true;
  for (const MapExpr& h : hs) {
    const cx c{0.3, 0.2};
    const HarmonicMap f(h, scale(c, h));
    for (int i = 0; i < 20; ++i) {
      const cx z = rng.in_disc(cx{0.0, 0.0}, 0.85);
      exact = exact && harmonic_pre_schwarzian(f, z) == pre_schwarzian(h, z);
      exact = exact && harmonic_schwarzian(f, z) == schwarzian(h, z);
    }
  }
  check(r, exact, "constant dilatation collapses to P(h), S(h) exactly");

  for (double C : {1.0, 2.0, 5.0}) {
    SeparationQuery q;
    q.C = C;
    q.z1 = q.z2 = cx{1.0 - 1.0 / (4.0 * C), 0.0};
    const double b3 = separation_bound(q);
    q.z1 = q.z2 = cx{1.0 - 1.0 / (9.0 * C), 0.0};
    const double b5 = separation_bound(q);
    check(r, std::abs(b3 - std::log(3.0)) < 1e-12 &&
                 std::abs(b5 - std::log(5.0)) < 1e-12,
          "separation bound reproduces log 3 / log 5 at 1-|xi| = 1/(4C), 1/(9C), C=" +
              fmt(C));
  }
  return r;
}

ExperimentResult run_carleson_profile() {
  ExperimentResult r{"carleson-profile", true, {}};
  const MapExpr f = example_family(30.0, cx{0.0, -1.0});
  // Spiral-interior target: image of a near-boundary point by the cusp, deep
  // inside the accumulation region of the boundary spiral.
  const cx w = f.jet(cx{-0.9995, 0.0}).f;
  const std::vector<double> rs{0.9, 0.99, 0.999, 0.9999};
  const auto prof = counting_bound_profile(f, w, rs);
  for (const auto& [rr, v] : prof)
    note(r, "  r=" + fmt(rr) + ": n(f,r,w) sqrt(1-r) = " + fmt(v));
  const double lastA = prof[prof.size() - 2].second;
  const double lastB = prof[prof.size() - 1].second;
  const double ratio = std::max(lastA, lastB) / std::min(lastA, lastB);
  check(r, ratio < 2.0,
        "profile bounded along the ladder: max/min of last two = " + fmt(ratio));
  return r;
}

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids{
      "sharp-bounds",       "koebe-extremal",    "critical-C",
      "valence-sweep",      "horodisc",          "distortion-envelopes",
      "harmonic-reduction", "carleson-profile"};
  return ids;
}

ExperimentResult run_experiment(const std::string& id) {
  if (id == "sharp-bounds") return run_sharp_bounds();
  if (id == "koebe-extremal") return run_koebe_extremal();
  if (id == "critical-C") return run_critical_c();
  if (id == "valence-sweep") return run_valence_sweep();
  if (id == "horodisc") return run_horodisc();
  if (id == "distortion-envelopes") return run_distortion_envelopes();
  if (id == "harmonic-reduction") return run_harmonic_reduction();
  if (id == "carleson-profile") return run_carleson_profile();
  throw ConfigError("unknown experiment id: " + id);
}

}  // namespace udisc
