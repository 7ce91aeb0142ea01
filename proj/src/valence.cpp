#include "udisc/valence.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <set>

#include "udisc/integrate.hpp"
#include "udisc/rng.hpp"

namespace udisc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cross(cx u, cx v) { return u.real() * v.imag() - u.imag() * v.real(); }

}  // namespace

// ---------------------------------------------------------------------------
// Boundary tracing

BoundaryTrace trace_boundary(const MapExpr& expr, double chord_tol,
                             double radius, const TraceOptions& opt) {
  auto cv = std::make_shared<CircleValues>(expr, radius, opt.value_tol);
  cv->prefill();

  const bool sing = cv->has_singular_param();
  const double lo = sing ? cv->cut() + opt.collar : cv->cut() + 1e-9;
  const double hi = sing ? cv->cut() + 2.0 * kPi - opt.collar
                         : cv->cut() + 2.0 * kPi - 1e-9;

  BoundaryTrace tr;
  tr.radius = radius;
  tr.chord_tol = chord_tol;
  tr.closed = true;
  tr.eval = [cv](double t) { return cv->value(t); };

  std::vector<double> ts(opt.base_points + 1);
  for (std::size_t i = 0; i <= opt.base_points; ++i)
    ts[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(opt.base_points);
  std::vector<cx> ps(ts.size());
  par::for_indices(ts.size(), par::default_mode(),
                   [&](std::size_t i) { ps[i] = cv->value(ts[i]); });

  const double cusp_guard = 0.01 * chord_tol;
  for (int round = 0; round < 48; ++round) {
    std::vector<char> split(ts.size() - 1, 0);
    bool any = false;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      if (ts[i + 1] - ts[i] < 1e-12) continue;
      const double chord = std::abs(ps[i + 1] - ps[i]);
      if (chord > chord_tol) {
        split[i] = 1;
        any = true;
      }
      if (i >= 1 && chord > cusp_guard) {
        const cx d1 = ps[i] - ps[i - 1];
        const cx d2 = ps[i + 1] - ps[i];
        const double n1 = std::abs(d1), n2 = std::abs(d2);
        if (n1 > 0 && n2 > 0) {
          const double s = std::clamp(
              (d1.real() * d2.real() + d1.imag() * d2.imag()) / (n1 * n2), -1.0,
              1.0);
          if (std::acos(s) > opt.turn_limit && std::abs(ps[i] - ps[i - 1]) > cusp_guard) {
            split[i] = 1;
            split[i - 1] = 1;
            any = true;
          }
        }
      }
    }
    if (!any) break;
    std::vector<double> mids;
    mids.reserve(ts.size());
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
      if (split[i]) mids.push_back(0.5 * (ts[i] + ts[i + 1]));
    std::vector<cx> mvals(mids.size());
    par::for_indices(mids.size(), par::default_mode(),
                     [&](std::size_t i) { mvals[i] = cv->value(mids[i]); });
    std::vector<double> nts;
    std::vector<cx> nps;
    nts.reserve(ts.size() + mids.size());
    nps.reserve(ts.size() + mids.size());
    std::size_t mi = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      nts.push_back(ts[i]);
      nps.push_back(ps[i]);
      if (i + 1 < ts.size() && split[i]) {
        nts.push_back(mids[mi]);
        nps.push_back(mvals[mi]);
        ++mi;
      }
    }
    ts.swap(nts);
    ps.swap(nps);
    if (ts.size() > opt.max_points) {
      tr.budget_exceeded = true;
      break;
    }
  }

  tr.params = std::move(ts);
  tr.points = std::move(ps);
  return tr;
}

// ---------------------------------------------------------------------------
// Polyline self-intersection

namespace {

bool on_segment_collinear(cx a, cx b, cx p) {
  return std::min(a.real(), b.real()) <= p.real() &&
         p.real() <= std::max(a.real(), b.real()) &&
         std::min(a.imag(), b.imag()) <= p.imag() &&
         p.imag() <= std::max(a.imag(), b.imag());
}

// Proper or touching intersection of [a,b] and [c,d].
bool segments_intersect(cx a, cx b, cx c, cx d) {
  const double d1 = cross(d - c, a - c);
  const double d2 = cross(d - c, b - c);
  const double d3 = cross(b - a, c - a);
  const double d4 = cross(b - a, d - a);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment_collinear(c, d, a)) return true;
  if (d2 == 0 && on_segment_collinear(c, d, b)) return true;
  if (d3 == 0 && on_segment_collinear(a, b, c)) return true;
  if (d4 == 0 && on_segment_collinear(a, b, d)) return true;
  return false;
}

double crossing_angle(cx a, cx b, cx c, cx d) {
  const cx u = b - a, v = d - c;
  const double nu = std::abs(u), nv = std::abs(v);
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return std::asin(std::clamp(std::abs(cross(u, v)) / (nu * nv), 0.0, 1.0));
}

struct SegGrid {
  double cell = 1.0;
  cx origin{};
  std::map<std::pair<long, long>, std::vector<int>> cells;

  void insert(int idx, cx a, cx b) {
    const long x0 = static_cast<long>(std::floor((std::min(a.real(), b.real()) - origin.real()) / cell));
    const long x1 = static_cast<long>(std::floor((std::max(a.real(), b.real()) - origin.real()) / cell));
    const long y0 = static_cast<long>(std::floor((std::min(a.imag(), b.imag()) - origin.imag()) / cell));
    const long y1 = static_cast<long>(std::floor((std::max(a.imag(), b.imag()) - origin.imag()) / cell));
    for (long x = x0; x <= x1; ++x)
      for (long y = y0; y <= y1; ++y) cells[{x, y}].push_back(idx);
  }
};

}  // namespace

SimpleReport is_simple(const BoundaryTrace& trace) {
  SimpleReport rep;
  // Collapse duplicate consecutive points; keep the parameter of the first.
  std::vector<cx> P;
  std::vector<double> T;
  P.reserve(trace.points.size());
  for (std::size_t i = 0; i < trace.points.size(); ++i) {
    if (!P.empty() && trace.points[i] == P.back()) continue;
    P.push_back(trace.points[i]);
    T.push_back(trace.params[i]);
  }
  if (P.size() >= 2 && P.front() == P.back()) {
    P.pop_back();
    T.pop_back();
  }
  const int M = static_cast<int>(P.size());
  if (M < 4) return rep;

  auto seg_a = [&](int i) { return P[i]; };
  auto seg_b = [&](int i) { return P[(i + 1) % M]; };
  auto t_lo = [&](int i) { return T[i]; };
  auto t_hi = [&](int i) { return i + 1 < M ? T[i + 1] : T[i] + (T[1] - T[0]); };

  double total_len = 0.0;
  double min_x = kInf, max_x = -kInf, min_y = kInf, max_y = -kInf;
  for (int i = 0; i < M; ++i) {
    total_len += std::abs(seg_b(i) - seg_a(i));
    min_x = std::min(min_x, P[i].real());
    max_x = std::max(max_x, P[i].real());
    min_y = std::min(min_y, P[i].imag());
    max_y = std::max(max_y, P[i].imag());
  }
  const double diag = std::hypot(max_x - min_x, max_y - min_y);
  SegGrid grid;
  grid.origin = cx{min_x, min_y};
  grid.cell = std::max(2.0 * total_len / M, diag / 2048.0);
  if (grid.cell <= 0) return rep;
  for (int i = 0; i < M; ++i) grid.insert(i, seg_a(i), seg_b(i));

  std::vector<std::pair<int, int>> cand;
  for (const auto& [key, idxs] : grid.cells)
    for (std::size_t u = 0; u < idxs.size(); ++u)
      for (std::size_t v = u + 1; v < idxs.size(); ++v)
        cand.emplace_back(std::min(idxs[u], idxs[v]), std::max(idxs[u], idxs[v]));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  auto adjacent = [&](int i, int j) {
    return j == i + 1 || (i == 0 && j == M - 1);
  };

  for (auto [i, j] : cand) {
    if (adjacent(i, j)) continue;
    const cx a = seg_a(i), b = seg_b(i), c = seg_a(j), d = seg_b(j);
    if (!segments_intersect(a, b, c, d)) continue;

    const bool near_params = (j - i) <= 2 || (i == 0 && j >= M - 2);
    const bool near_tangent = crossing_angle(a, b, c, d) < 1e-3;
    bool confirmed = true;
    if ((near_params || near_tangent) && trace.eval) {
      // Re-refine both parameter intervals and retest sub-segments that do
      // not share a parameter neighborhood.
      confirmed = false;
      const int K = 16;
      std::vector<cx> A(K + 1), B(K + 1);
      std::vector<double> TA(K + 1), TB(K + 1);
      for (int u = 0; u <= K; ++u) {
        TA[u] = t_lo(i) + (t_hi(i) - t_lo(i)) * u / static_cast<double>(K);
        TB[u] = t_lo(j) + (t_hi(j) - t_lo(j)) * u / static_cast<double>(K);
        A[u] = trace.eval(TA[u]);
        B[u] = trace.eval(TB[u]);
      }
      const double fine_gap =
          2.0 * std::max(t_hi(i) - t_lo(i), t_hi(j) - t_lo(j)) / K;
      for (int u = 0; u < K && !confirmed; ++u)
        for (int v = 0; v < K; ++v) {
          if (std::abs(TA[u] - TB[v]) < fine_gap) continue;
          if (segments_intersect(A[u], A[u + 1], B[v], B[v + 1])) {
            confirmed = true;
            break;
          }
        }
    }
    if (!confirmed) continue;

    // Localize by parameter bisection on the chords.
    double a0 = t_lo(i), a1 = t_hi(i), b0 = t_lo(j), b1 = t_hi(j);
    if (trace.eval) {
      for (int it = 0; it < 40; ++it) {
        const double am = 0.5 * (a0 + a1);
        const cx pa0 = trace.eval(a0), pam = trace.eval(am), pa1 = trace.eval(a1);
        const cx pb0 = trace.eval(b0), pb1 = trace.eval(b1);
        if (segments_intersect(pa0, pam, pb0, pb1))
          a1 = am;
        else if (segments_intersect(pam, pa1, pb0, pb1))
          a0 = am;
        else
          break;
        const double bm = 0.5 * (b0 + b1);
        const cx qb0 = trace.eval(b0), qbm = trace.eval(bm), qb1 = trace.eval(b1);
        const cx qa0 = trace.eval(a0), qa1 = trace.eval(a1);
        if (segments_intersect(qb0, qbm, qa0, qa1))
          b1 = bm;
        else if (segments_intersect(qbm, qb1, qa0, qa1))
          b0 = bm;
        else
          break;
      }
    }
    rep.simple = false;
    rep.first_intersection = {0.5 * (a0 + a1), 0.5 * (b0 + b1)};
    return rep;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Boundary sign changes

int sign_changes_real(const MapExpr& expr, double t0, double t1,
                      const SignChangeOptions& opt) {
  CircleValues cv(expr, 1.0, opt.value_tol);
  cv.prefill();
  const double lo = std::max(t0, cv.has_singular_param() ? cv.cut() + opt.collar
                                                         : t0);
  std::vector<double> ts(opt.base_points + 1);
  for (std::size_t i = 0; i <= opt.base_points; ++i)
    ts[i] = lo + (t1 - lo) * static_cast<double>(i) / static_cast<double>(opt.base_points);
  std::vector<double> vals(ts.size());
  par::for_indices(ts.size(), par::default_mode(),
                   [&](std::size_t i) { vals[i] = cv.value(ts[i]).real(); });

  double scale = 0.0;
  for (double v : vals) scale = std::max(scale, std::abs(v));
  const double near_zero = 1e-3 * scale;

  for (int round = 0; round < opt.refine_rounds; ++round) {
    std::vector<double> nts;
    std::vector<double> nvs;
    nts.reserve(2 * ts.size());
    nvs.reserve(2 * ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      nts.push_back(ts[i]);
      nvs.push_back(vals[i]);
      if (i + 1 < ts.size() &&
          (std::abs(vals[i]) < near_zero || std::abs(vals[i + 1]) < near_zero)) {
        const double m = 0.5 * (ts[i] + ts[i + 1]);
        nts.push_back(m);
        nvs.push_back(cv.value(m).real());
      }
    }
    ts.swap(nts);
    vals.swap(nvs);
  }

  int changes = 0;
  double prev = 0.0;
  bool have_prev = false;
  for (double v : vals) {
    if (v == 0.0) continue;
    if (have_prev && ((prev > 0) != (v > 0))) ++changes;
    prev = v;
    have_prev = true;
  }
  return changes;
}

int sign_changes_real(const MapExpr& expr, const SignChangeOptions& opt) {
  return sign_changes_real(expr, 0.0, kPi, opt);
}

// ---------------------------------------------------------------------------
// Argument-principle winding number

namespace {

struct Contour {
  std::unique_ptr<CircleValues> cv;
  double r;
  double scale;  // max |f - w| on a probe grid
  double mingap;
};

Contour make_contour(const MapExpr& expr, cx w, double r, double value_tol) {
  Contour c;
  c.cv = std::make_unique<CircleValues>(expr, r, value_tol);
  c.cv->prefill();
  c.r = r;
  c.scale = 0.0;
  c.mingap = kInf;
  const int probe = 512;
  for (int i = 0; i < probe; ++i) {
    const double t = 2.0 * kPi * i / probe;
    const double g = std::abs(c.cv->value(t) - w);
    c.scale = std::max(c.scale, g);
    c.mingap = std::min(c.mingap, g);
  }
  return c;
}

}  // namespace

int winding_number(const MapExpr& expr, cx w, double r,
                   const WindingOptions& opt) {
  for (int nudge = 0; nudge <= opt.nudge_budget; ++nudge) {
    const int step = (nudge + 1) / 2;
    const double sign = (nudge % 2 == 1) ? 1.0 : -1.0;
    double rr = nudge == 0 ? r : r + sign * step * (1.0 - r) / 16.0;
    if (rr >= 1.0 || rr <= 0.0) continue;
    Contour c = make_contour(expr, w, rr, opt.value_tol);
    if (!(c.mingap > opt.clearance_rel * c.scale)) continue;

    long prev_n = LONG_MIN;
    for (std::size_t m = opt.m0; m <= opt.m_max; m *= 2) {
      std::vector<cx> terms(m);
      CircleValues& cv = *c.cv;
      par::for_indices(m, opt.mode, [&](std::size_t j) {
        const double t = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m);
        const cx z = std::polar(rr, t);
        terms[j] = z * cv.dvalue(t) / (cv.value(t) - w);
      });
      cx I{};
      for (const cx& u : terms) I += u;
      I /= static_cast<double>(m);
      const long n = std::lround(I.real());
      const double resid = std::abs(I - cx{static_cast<double>(n), 0.0});
      if (resid < 0.1) {
        if (n == prev_n) return static_cast<int>(n);
        prev_n = n;
      } else {
        prev_n = LONG_MIN;
      }
    }
    throw ConvergenceError("winding number trapezoid did not settle");
  }
  throw ConvergenceError("no admissible contour radius (target too close to the image of the circle)");
}

// ---------------------------------------------------------------------------
// Preimage search

PreimageSet preimages(const MapExpr& expr, cx w, const Region& region,
                      const PreimageOptions& opt) {
  PreimageSet out;
  out.target = w;

  const Disc box = region.bounding_disc();
  std::vector<cx> seeds;
  seeds.reserve(opt.n_seeds);
  std::uint64_t ix = 0;
  for (std::size_t i = 0; i < opt.n_seeds && ix < 64 * opt.n_seeds; ++i) {
    cx z;
    do {
      z = halton_disc(ix++, box.center, box.radius);
    } while ((std::abs(z) >= 1.0 || !region.contains(z)) && ix < 64 * opt.n_seeds);
    if (std::abs(z) < 1.0 && region.contains(z)) seeds.push_back(z);
  }

  const MapExpr dexpr = expr.derivative();
  const bool direct = expr.closed_form_value();
  std::vector<cx> roots(seeds.size(), cx{kInf, kInf});
  std::vector<double> residuals(seeds.size(), kInf);

  par::for_indices(seeds.size(), opt.mode, [&](std::size_t s) {
    cx z = seeds[s];
    cx fz = expr.jet(z).f;
    for (int it = 0; it < opt.max_iter; ++it) {
      if (std::abs(fz - w) <= opt.tol) break;
      const cx d = dexpr.jet_at(z).f;
      if (std::abs(d) < kCriticalThreshold) return;
      cx stepv = -(fz - w) / d;
      bool moved = false;
      for (int h = 0; h < 20; ++h) {
        const cx zn = z + stepv;
        if (std::abs(zn) >= 1.0 - 1e-12) {
          stepv *= 0.5;
          continue;
        }
        cx fn;
        if (direct) {
          fn = expr.jet(zn).f;
        } else {
          const QuadResult q = integrate_segment(
              [&](cx t) { return dexpr.jet_at(t).f; }, z, zn, 1e-12);
          fn = fz + q.value;
        }
        if (std::abs(fn - w) < std::abs(fz - w)) {
          z = zn;
          fz = fn;
          moved = true;
          break;
        }
        stepv *= 0.5;
      }
      if (!moved) return;
    }
    if (std::abs(fz - w) > opt.tol) return;
    // Fresh full evaluation guards against drift of the incremental values.
    const double res = std::abs(expr.jet(z).f - w);
    if (res > opt.tol) return;
    if (!region.contains(z)) return;
    roots[s] = z;
    residuals[s] = res;
  });

  for (std::size_t s = 0; s < seeds.size(); ++s) {
    if (residuals[s] == kInf) continue;
    bool dup = false;
    for (cx q : out.points)
      if (std::abs(mobius(q, roots[s])) < opt.dedup) {
        dup = true;
        break;
      }
    if (dup) continue;
    out.points.push_back(roots[s]);
    out.residuals.push_back(residuals[s]);
  }

  if (opt.validate_with_winding && region.kind == Region::Kind::WholeDisc) {
    double rmax = 0.0;
    for (cx z : out.points) rmax = std::max(rmax, std::abs(z));
    const double renc = std::min(1.0 - 1e-7, rmax + 0.5 * (1.0 - rmax));
    try {
      WindingOptions wopt;
      out.winding_reference = winding_number(expr, w, renc, wopt);
      out.cross_checked =
          out.winding_reference == static_cast<int>(out.points.size());
    } catch (const ConvergenceError&) {
      out.winding_reference = -1;
      out.cross_checked = false;
    }
  }
  return out;
}

CarlesonSumResult carleson_sum(const PreimageSet& pre, const CarlesonSquare& q) {
  CarlesonSumResult res;
  for (cx z : pre.points) {
    if (!carleson_contains(q, z)) continue;
    ++res.members;
    res.sum += std::sqrt(1.0 - std::abs(z));
  }
  res.ratio = res.sum / std::sqrt(q.arclength);
  return res;
}

std::vector<std::pair<double, double>> counting_bound_profile(
    const MapExpr& expr, cx w, const std::vector<double>& r_ladder,
    const WindingOptions& opt) {
  std::vector<std::pair<double, double>> out;
  out.reserve(r_ladder.size());
  for (double r : r_ladder) {
    const int n = winding_number(expr, w, r, opt);
    out.emplace_back(r, n * std::sqrt(1.0 - r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polyline winding and family experiments

std::optional<int> polyline_winding(const std::vector<cx>& pts, cx w,
                                    double min_dist) {
  if (pts.size() < 3) return std::nullopt;
  double total = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const cx a = pts[i] - w;
    const cx b = pts[(i + 1) % n] - w;
    if (std::abs(a) < min_dist) return std::nullopt;
    total += std::arg(b / a);
  }
  const double turns = total / (2.0 * kPi);
  const long k = std::lround(turns);
  if (std::abs(turns - static_cast<double>(k)) > 0.25) return std::nullopt;
  return static_cast<int>(k);
}

namespace {

double auto_chord_tol(const MapExpr& expr, double radius, double rel,
                      const TraceOptions& opt) {
  CircleValues cv(expr, radius, opt.value_tol);
  cv.prefill();
  const bool sing = cv.has_singular_param();
  const double lo = sing ? cv.cut() + opt.collar : cv.cut() + 1e-9;
  const double hi =
      sing ? cv.cut() + 2.0 * kPi - opt.collar : cv.cut() + 2.0 * kPi - 1e-9;
  double min_x = kInf, max_x = -kInf, min_y = kInf, max_y = -kInf;
  const int probe = 2048;
  for (int i = 0; i <= probe; ++i) {
    const cx p = cv.value(lo + (hi - lo) * i / static_cast<double>(probe));
    min_x = std::min(min_x, p.real());
    max_x = std::max(max_x, p.real());
    min_y = std::min(min_y, p.imag());
    max_y = std::max(max_y, p.imag());
  }
  return rel * std::hypot(max_x - min_x, max_y - min_y);
}

}  // namespace

CriticalCResult critical_C(cx zeta, double tol_C, const TraceOptions& opt) {
  CriticalCResult res;
  auto simple_at = [&](double C) {
    const MapExpr f = example_family(C, zeta);
    const double tol = auto_chord_tol(f, 1.0, 1e-3, opt);
    const BoundaryTrace tr = trace_boundary(f, tol, 1.0, opt);
    const bool s = is_simple(tr).simple;
    res.evaluations.emplace_back(C, s);
    return s;
  };

  double lo = 1.0;
  if (!simple_at(lo)) {
    res.predicate_noise = true;
    res.lo = res.hi = res.value = lo;
    return res;
  }
  double hi = 1.6;
  while (simple_at(hi)) {
    lo = hi;
    hi *= 1.6;
    if (hi > 64.0) {
      res.predicate_noise = true;
      res.lo = lo;
      res.hi = hi;
      res.value = hi;
      return res;
    }
  }
  while (hi - lo > tol_C) {
    const double mid = 0.5 * (lo + hi);
    if (simple_at(mid))
      lo = mid;
    else
      hi = mid;
  }
  res.lo = lo;
  res.hi = hi;
  res.value = 0.5 * (lo + hi);
  return res;
}

FamilyValenceScan valence_of_family(double C, cx zeta, double radius,
                                    const TraceOptions& opt) {
  FamilyValenceScan scan;
  const MapExpr f = example_family(C, zeta);
  const double tol = auto_chord_tol(f, radius, 1e-3, opt);
  const BoundaryTrace tr = trace_boundary(f, tol, radius, opt);

  double min_x = kInf, max_x = -kInf, min_y = kInf, max_y = -kInf;
  for (cx p : tr.points) {
    min_x = std::min(min_x, p.real());
    max_x = std::max(max_x, p.real());
    min_y = std::min(min_y, p.imag());
    max_y = std::max(max_y, p.imag());
  }
  const double diag = std::hypot(max_x - min_x, max_y - min_y);
  const cx mid{0.5 * (min_x + max_x), 0.5 * (min_y + max_y)};

  // w sample: log-polar fans around the spiral center f(-1)=0 and the box
  // center, plus a uniform grid over the bounding box.
  std::vector<cx> ws;
  for (cx center : {cx{0.0, 0.0}, mid}) {
    for (int kr = 0; kr < 20; ++kr) {
      const double rho = diag * 0.5 * std::pow(10.0, -5.0 * (19 - kr) / 19.0);
      for (int ka = 0; ka < 32; ++ka)
        ws.push_back(center + std::polar(rho, 2.0 * kPi * ka / 32.0));
    }
  }
  const int G = 40;
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j)
      ws.push_back(cx{min_x + (max_x - min_x) * (i + 0.5) / G,
                      min_y + (max_y - min_y) * (j + 0.5) / G});
  scan.w_samples = ws.size();

  std::vector<int> winds(ws.size(), INT_MIN);
  par::for_indices(ws.size(), par::default_mode(), [&](std::size_t i) {
    const auto v = polyline_winding(tr.points, ws[i], diag * 1e-12);
    if (v) winds[i] = *v;
  });
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (winds[i] != INT_MIN && winds[i] > scan.valence) {
      scan.valence = winds[i];
      scan.argmax_w = ws[i];
    }

  SignChangeOptions sopt;
  sopt.base_points = std::max<std::size_t>(4096, static_cast<std::size_t>(256 * C));
  scan.sign_changes_half = sign_changes_real(f, sopt);
  scan.sign_changes_full = sign_changes_real(f, 0.0, 2.0 * kPi - sopt.collar, sopt);
  return scan;
}

SlopeResult valence_slope(cx zeta, const std::vector<double>& c_list,
                          double radius, const TraceOptions& opt) {
  SlopeResult res;
  double num = 0.0, den = 0.0;
  for (double C : c_list) {
    const FamilyValenceScan scan = valence_of_family(C, zeta, radius, opt);
    res.per_C.emplace_back(C, scan.valence);
    num += C * scan.valence;
    den += C * C;
  }
  res.slope = den > 0 ? num / den : 0.0;
  return res;
}

}  // namespace udisc
