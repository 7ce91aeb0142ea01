#include "udisc/boundary.hpp"

#include <cmath>
#include <limits>

#include "udisc/integrate.hpp"

namespace udisc {

namespace {

// Angles of declared singularities sitting on the circle of given radius.
std::vector<double> singular_angles(const MapExpr& e, double radius) {
  std::vector<double> out;
  for (cx s : e.singular_points())
    if (std::abs(std::abs(s) - radius) < 1e-9) out.push_back(std::arg(s));
  return out;
}

}  // namespace

CircleValues::CircleValues(MapExpr expr, double radius, double tol)
    : expr_(std::move(expr)), dexpr_(expr_.derivative()), radius_(radius),
      tol_(tol), direct_(expr_.closed_form_value()) {
  const auto sing = singular_angles(expr_, radius_);
  if (!sing.empty()) {
    has_sing_ = true;
    cut_ = sing.front();  // one boundary singularity in the supported algebra
  }
  if (direct_) return;

  // Anchor the antiderivative.  A primitive whose basepoint lies on this
  // circle anchors for free at its basevalue.
  const detail::ExprNode& n = expr_.node();
  if ((n.kind == ExprKind::PrimitiveOf || n.kind == ExprKind::ExampleFamily)) {
    const cx bp = (n.kind == ExprKind::ExampleFamily) ? cx{-1.0, 0.0} : n.a;
    const cx bv = (n.kind == ExprKind::ExampleFamily) ? cx{0.0, 0.0} : n.b;
    if (std::abs(std::abs(bp) - radius_) < 1e-12) {
      anchor_t_ = std::arg(bp);
      anchor_f_ = bv;
      cache_[0] = anchor_f_;
      if (has_sing_ && anchor_t_ <= cut_) anchor_t_ += 2.0 * kPi;
      return;
    }
  }
  // Otherwise integrate out from the origin along a radius opposite the cut.
  anchor_t_ = has_sing_ ? cut_ + kPi : 0.0;
  const cx za = point(anchor_t_);
  anchor_f_ = expr_.jet_at(cx{0.0, 0.0}).f;
  const QuadResult q = integrate_segment(
      [&](cx z) { return dexpr_.jet_at(z).f; }, cx{0.0, 0.0}, za, tol_);
  anchor_f_ += q.value;
  cache_[0] = anchor_f_;
}

double CircleValues::reduce(double t) const {
  const double lo = cut_, hi = cut_ + 2.0 * kPi;
  while (t <= lo) t += 2.0 * kPi;
  while (t > hi) t -= 2.0 * kPi;
  return t;
}

cx CircleValues::dvalue(double t) const { return dexpr_.jet_at(point(t)).f; }

void CircleValues::prefill() {
  if (direct_) return;
  const long kmin = static_cast<long>(std::ceil((cut_ - anchor_t_) / kStep)) + 1;
  const long kmax =
      static_cast<long>(std::floor((cut_ + 2.0 * kPi - anchor_t_) / kStep)) - 1;
  checkpoint(kmin);
  checkpoint(kmax);
}

cx CircleValues::checkpoint(long k) {
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  // Fill from the nearest cached ladder rung toward the anchor.
  const long dir = k > 0 ? 1 : -1;
  long kk = k;
  while (cache_.find(kk) == cache_.end() && kk != 0) kk -= dir;
  cx f = cache_[kk];
  while (kk != k) {
    const double t0 = anchor_t_ + kk * kStep;
    const double t1 = t0 + dir * kStep;
    const QuadResult q = integrate_arc(
        [&](cx z) { return dexpr_.jet_at(z).f; }, cx{0.0, 0.0}, radius_, t0, t1,
        tol_);
    f += q.value;
    kk += dir;
    cache_[kk] = f;
  }
  return f;
}

cx CircleValues::value(double t) {
  t = reduce(t);
  if (direct_) return expr_.jet_at(point(t)).f;
  // Nearest ladder rung on the anchor side of t, clamped strictly inside the
  // window so checkpoints never land on the cut.
  const double rel = (t - anchor_t_) / kStep;
  long k = static_cast<long>(std::trunc(rel));
  const long kmin = static_cast<long>(std::ceil((cut_ - anchor_t_) / kStep)) + 1;
  const long kmax =
      static_cast<long>(std::floor((cut_ + 2.0 * kPi - anchor_t_) / kStep)) - 1;
  if (k < kmin) k = kmin;
  if (k > kmax) k = kmax;
  const cx base = checkpoint(k);
  const double tk = anchor_t_ + k * kStep;
  if (tk == t) return base;
  const QuadResult q = integrate_arc(
      [&](cx z) { return dexpr_.jet_at(z).f; }, cx{0.0, 0.0}, radius_, tk, t,
      tol_);
  return base + q.value;
}

Jet2 boundary_jet(const MapExpr& expr, double t) {
  const cx z = std::polar(1.0, t);
  for (cx s : expr.singular_points())
    if (std::abs(z - s) < 1e-12)
      throw SingularityError("boundary parameter hits a singularity", z);
  Jet2 out;
  const MapExpr d = expr.derivative();
  bool d_singular = false;
  for (cx s : d.singular_points())
    if (std::abs(z - s) < 1e-12) d_singular = true;
  if (d_singular) {
    // The value extends continuously but the derivative blows up here
    // (branch point of f'); mark the jet components accordingly.
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.df = out.d2f = cx{nan, nan};
  } else {
    const Jet2 jd = d.jet_at(z);
    out.df = jd.f;
    out.d2f = jd.df;
  }
  if (expr.closed_form_value()) {
    out.f = expr.jet_at(z).f;
  } else {
    CircleValues cv(expr, 1.0);
    out.f = cv.value(t);
  }
  return out;
}

}  // namespace udisc
