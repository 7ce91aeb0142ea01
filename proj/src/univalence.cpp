#include "udisc/univalence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "udisc/rng.hpp"

namespace udisc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> radius_ladder(const GridSpec& spec) {
  std::vector<double> rs{0.0};
  for (int k = 1; k <= spec.max_k; ++k) {
    double r = 1.0 - std::pow(2.0, -k);
    if (r >= spec.r_cap) {
      rs.push_back(spec.r_cap);
      break;
    }
    rs.push_back(r);
  }
  return rs;
}

std::size_t ring_count(double r, double factor) {
  if (r == 0.0) return 1;
  return static_cast<std::size_t>(
      std::ceil(2.0 * kPi / std::sqrt(1.0 - r) * factor));
}

}  // namespace

ScanMax scan_region_max(const std::function<double(cx)>& field,
                        const Region& region, const GridSpec& spec) {
  auto guarded = [&](cx z) -> double {
    try {
      return field(z);
    } catch (const CriticalPointError&) {
      return kInf;
    }
  };

  ScanMax out;
  out.value = -kInf;
  const Disc box = region.bounding_disc();
  const bool mapped = region.kind == Region::Kind::Disc ||
                      region.kind == Region::Kind::Horodisc;
  double lo = 0.0, hi = 1.0;
  if (region.kind == Region::Kind::Annulus) {
    lo = region.r_inner;
    hi = region.r_outer;
  }

  for (double r : radius_ladder(spec)) {
    // For annuli the unit ladder is remapped onto [lo, hi).
    double rr = r;
    if (region.kind == Region::Kind::Annulus) {
      rr = lo + (std::min(hi, 1.0) - lo) * r;
      if (hi >= 1.0 && rr > spec.r_cap) rr = spec.r_cap;
    }
    const std::size_t m = ring_count(r, spec.angular_factor);
    std::vector<double> vals(m, -kInf);
    std::vector<cx> pts(m);
    par::for_indices(m, spec.mode, [&](std::size_t i) {
      const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(m);
      cx z = std::polar(rr, t);
      if (mapped) z = box.center + box.radius * z;
      if (std::abs(z) >= 1.0 || !region.contains(z)) return;
      pts[i] = z;
      vals[i] = guarded(z);
    });
    for (std::size_t i = 0; i < m; ++i) {
      if (vals[i] == -kInf) continue;
      ++out.samples;
      if (vals[i] > out.value) {
        out.value = vals[i];
        out.argmax = pts[i];
      }
    }
  }
  if (out.samples == 0) out.value = 0.0;
  return out;
}

namespace {

CriterionReport quantity_verdict(const std::string& id,
                                 const std::function<double(cx)>& field,
                                 double threshold, const Region& region,
                                 double tol, const GridSpec& spec) {
  const ScanMax scan = scan_region_max(field, region, spec);
  CriterionReport rep;
  rep.criterion_id = id;
  rep.region = region;
  rep.worst_point = scan.argmax;
  rep.worst_margin = threshold - scan.value;
  rep.samples_evaluated = scan.samples;
  rep.holds = rep.worst_margin >= -tol;
  return rep;
}

}  // namespace

CriterionReport becker_verdict(const MapExpr& expr, const Region& region,
                               double tol, const GridSpec& spec) {
  auto p = abs_pre_schwarzian_field(expr);
  return quantity_verdict(
      "becker",
      [p](cx z) { return std::abs(z) * p(z) * (1.0 - std::norm(z)); }, 1.0,
      region, tol, spec);
}

CriterionReport becker_unweighted_verdict(const MapExpr& expr,
                                          const Region& region, double tol,
                                          const GridSpec& spec) {
  auto p = abs_pre_schwarzian_field(expr);
  return quantity_verdict(
      "becker-z", [p](cx z) { return p(z) * (1.0 - std::norm(z)); }, 1.0,
      region, tol, spec);
}

CriterionReport nehari_verdict(const MapExpr& expr, const Region& region,
                               double tol, const GridSpec& spec) {
  auto s = abs_schwarzian_field(expr);
  return quantity_verdict(
      "nehari",
      [s](cx z) {
        const double w = 1.0 - std::norm(z);
        return s(z) * w * w;
      },
      2.0, region, tol, spec);
}

HvVerdict hv_verdict(const MapExpr& expr, double C, double tol,
                     const GridSpec& spec) {
  auto p = abs_pre_schwarzian_field(expr);
  // Scan the negated margin so the generic max scan finds the worst point.
  const ScanMax scan = scan_region_max(
      [&, p](cx z) {
        return -(1.0 + C * (1.0 - std::abs(z)) - p(z) * (1.0 - std::norm(z)));
      },
      Region::whole_disc(), spec);
  HvVerdict v;
  v.C = C;
  v.samples = scan.samples;
  v.grid_min_margin = -scan.value;
  v.grid_worst_point = scan.argmax;
  if (v.grid_min_margin < -tol)
    throw HypothesisError("growth condition violated on grid", scan.argmax);
  if (C <= 1.0) {
    v.holds_on_disc = true;
    v.horodisc_a = 0.0;
    v.guarantee = "univalent on the unit disc";
  } else {
    v.holds_on_disc = false;
    v.horodisc_a = 1.0 - std::pow(1.0 + C, -2.0);
    v.guarantee = "univalent on every horodisc D(a e^{i theta}, 1-a)";
  }
  return v;
}

double becker_reduction_max(double C, int n_samples) {
  double worst = 0.0;
  for (int i = 0; i <= n_samples; ++i) {
    const double r = static_cast<double>(i) / n_samples;
    worst = std::max(worst, r * (1.0 + C * (1.0 - r)));
  }
  return worst;
}

CriterionReport horodisc_transform_check(const MapExpr& expr, double C,
                                         double theta, double tol,
                                         const GridSpec& spec) {
  const double a = 1.0 - std::pow(1.0 + C, -2.0);
  const cx rot = std::polar(1.0, theta);
  const MapExpr g = compose(expr, affine(rot * a, rot * (1.0 - a)));
  CriterionReport rep =
      becker_unweighted_verdict(g, Region::whole_disc(), tol, spec);
  rep.criterion_id = "horodisc-transform";
  return rep;
}

double lemma41_h(double C, double t) {
  return (1.0 + C * (1.0 - t)) / (1.0 - t * t);
}

double lemma41_term(double C, cx z) {
  const double q = C * C + 2.0 * C;
  const double t = std::abs(q / (q + 1.0) + z / ((1.0 + C) * (1.0 + C)));
  return lemma41_h(C, t) * (1.0 - std::norm(z)) / ((1.0 + C) * (1.0 + C));
}

ScanMax lemma41_max(double C, const GridSpec& spec) {
  return scan_region_max([C](cx z) { return lemma41_term(C, z); },
                         Region::whole_disc(), spec);
}

double lemma41_tc(double C) {
  return (1.0 + C - std::sqrt(1.0 + 2.0 * C)) / C;
}

// ---------------------------------------------------------------------------
// Injectivity sampling

namespace {

struct PairSampler {
  const Region& region;
  Rng rng;
  std::uint64_t halton_ix = 0;

  explicit PairSampler(const Region& r, std::uint64_t seed) : region(r), rng(seed) {}

  cx next_halton(std::uint32_t b1, std::uint32_t b2) {
    const Disc box = region.bounding_disc();
    for (int tries = 0; tries < 4096; ++tries) {
      const cx z = halton_disc(halton_ix++, box.center, box.radius, b1, b2);
      if (std::abs(z) < 1.0 && region.contains(z)) return z;
    }
    throw ConvergenceError("region rejection sampling exhausted");
  }

  cx next_uniform() {
    const Disc box = region.bounding_disc();
    for (int tries = 0; tries < 4096; ++tries) {
      const cx z = rng.in_disc(box.center, box.radius);
      if (std::abs(z) < 1.0 && region.contains(z)) return z;
    }
    throw ConvergenceError("region rejection sampling exhausted");
  }
};

}  // namespace

CollisionReport injectivity_sample(const MapExpr& expr, const Region& region,
                                   std::size_t n_pairs, std::uint64_t seed,
                                   const InjectivityOptions& opt) {
  CollisionReport rep;
  rep.seed = seed;

  // Pair list is generated serially so the stream is reproducible; half the
  // pairs come from Halton streams, half from the seeded generator.
  std::vector<std::pair<cx, cx>> pairs;
  pairs.reserve(n_pairs);
  PairSampler sampler(region, seed);
  for (std::size_t i = 0; i < n_pairs; ++i) {
    if (i % 2 == 0)
      pairs.emplace_back(sampler.next_halton(2, 3), sampler.next_halton(5, 7));
    else
      pairs.emplace_back(sampler.next_uniform(), sampler.next_uniform());
  }

  // Coarse image-gap scan (parallel), then ordered local refinement.
  std::vector<double> gap(n_pairs, kInf);
  std::vector<cx> f1(n_pairs), f2(n_pairs);
  par::for_indices(n_pairs, opt.mode, [&](std::size_t i) {
    const auto& [a, b] = pairs[i];
    if (hyperbolic_distance(a, b) <= opt.separation_floor) return;
    f1[i] = expr.jet(a).f;
    f2[i] = expr.jet(b).f;
    gap[i] = std::abs(f1[i] - f2[i]);
  });

  double scale = 0.0;
  for (std::size_t i = 0; i < n_pairs; ++i)
    if (gap[i] < kInf) scale = std::max(scale, gap[i]);
  const double trigger = std::max(1e-2 * scale, 64.0 * opt.collision_tol);

  const MapExpr dexpr = expr.derivative();
  for (std::size_t i = 0; i < n_pairs; ++i) {
    if (gap[i] > trigger) continue;
    // Newton on f(w) = f(z1) from w = z2, damped by halving.
    const cx z1 = pairs[i].first;
    const cx target = f1[i];
    cx w = pairs[i].second;
    cx fw = f2[i];
    bool ok = false;
    for (int it = 0; it < 48; ++it) {
      if (std::abs(fw - target) <= opt.collision_tol) {
        ok = true;
        break;
      }
      const cx d = dexpr.jet_at(w).f;
      if (std::abs(d) < kCriticalThreshold) break;
      cx step = -(fw - target) / d;
      cx w_next;
      cx f_next;
      int halvings = 0;
      for (; halvings < 24; ++halvings) {
        w_next = w + step;
        if (std::abs(w_next) >= 1.0 - 1e-12) {
          step *= 0.5;
          continue;
        }
        f_next = expr.jet(w_next).f;
        if (std::abs(f_next - target) < std::abs(fw - target)) break;
        step *= 0.5;
      }
      if (halvings == 24) break;
      w = w_next;
      fw = f_next;
    }
    if (!ok) continue;
    if (!region.contains(w)) continue;
    if (hyperbolic_distance(z1, w) < opt.separation_floor) continue;
    rep.found = true;
    rep.z1 = z1;
    rep.z2 = w;
    rep.image_gap = std::abs(fw - target);
    rep.pairs_tested = i + 1;
    return rep;
  }
  rep.pairs_tested = n_pairs;
  return rep;
}

LimsupReport local_becker_limsup(const MapExpr& expr, cx zeta_boundary,
                                 int n_points) {
  LimsupReport rep;
  const cx zeta = zeta_boundary / std::abs(zeta_boundary);
  auto p = abs_pre_schwarzian_field(expr);
  for (int k = 1; k <= n_points; ++k) {
    const double r = 1.0 - std::pow(2.0, -k);
    const cx w = r * zeta;
    rep.values.emplace_back(r, p(w) * (1.0 - std::norm(w)));
  }
  const int tail = (n_points + 2) / 3;
  for (int i = n_points - tail; i < n_points; ++i)
    rep.tail_estimate = std::max(rep.tail_estimate, rep.values[i].second);
  if (rep.tail_estimate > 6.0)
    rep.classification = LimsupClass::ClusteringGuaranteed;
  else if (rep.tail_estimate < 1.0)
    rep.classification = LimsupClass::LocallyUnivalentCompatible;
  else
    rep.classification = LimsupClass::NoConclusion;
  return rep;
}

const char* limsup_class_name(LimsupClass c) {
  switch (c) {
    case LimsupClass::ClusteringGuaranteed: return "preimage-clustering guaranteed";
    case LimsupClass::NoConclusion: return "no conclusion";
    case LimsupClass::LocallyUnivalentCompatible: return "locally-univalent-compatible";
  }
  return "?";
}

double converse_radius(double C, double abs_a) {
  const double c = C / (1.0 + C);
  return std::sqrt((abs_a - c) / (abs_a * (1.0 - abs_a * c)));
}

CriterionReport converse_bound_check(const MapExpr& expr, ConverseMode mode,
                                     const ConverseParams& params,
                                     const GridSpec& spec) {
  auto p = abs_pre_schwarzian_field(expr);
  if (mode == ConverseMode::Th2) {
    Region ann = Region::in_annulus(params.a, 1.0);
    // Scan the quantity-over-bound ratio shifted so threshold is 4.
    CriterionReport rep = quantity_verdict(
        "th2-bound", [p](cx z) { return p(z) * (1.0 - std::abs(z)); }, 4.0,
        ann, 1e-9, spec);
    return rep;
  }
  const double C = params.C;
  const double inner = C / (1.0 + C);
  Region ann = Region::in_annulus(std::nextafter(inner, 1.0), 1.0);
  // Negated margin scan: bound(z) - quantity(z) must stay >= 0.
  const ScanMax scan = scan_region_max(
      [&, p](cx z) {
        const double r = converse_radius(C, std::abs(z));
        const double bound = 2.0 + 4.0 * (1.0 + (1.0 / r - 1.0));
        return -(bound - p(z) * (1.0 - std::norm(z)));
      },
      ann, spec);
  CriterionReport rep;
  rep.criterion_id = "th3-bound";
  rep.region = ann;
  rep.worst_point = scan.argmax;
  rep.worst_margin = -scan.value;
  rep.samples_evaluated = scan.samples;
  rep.holds = rep.worst_margin >= -1e-9;
  return rep;
}

}  // namespace udisc
