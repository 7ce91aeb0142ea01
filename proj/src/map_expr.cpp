#include "udisc/map_expr.hpp"

#include <cmath>
#include <utility>

#include "udisc/integrate.hpp"

namespace udisc {

namespace {

constexpr double kInteriorValueTol = 1e-11;
constexpr double kSingularHitRadius = 1e-13;

cx ipow(cx z, long long e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  cx acc{1.0, 0.0}, base = z;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool is_integer(double p, long long& out) {
  const double r = std::nearbyint(p);
  if (std::abs(p - r) < 1e-12 && std::abs(r) < 1e15) {
    out = static_cast<long long>(r);
    return true;
  }
  return false;
}

// z^p with integer fast path; principal branch otherwise.
cx cpow(cx z, double p) {
  long long e;
  if (is_integer(p, e)) {
    if (e == 0) return {1.0, 0.0};
    return ipow(z, e);
  }
  return std::pow(z, p);
}

cx family_dvalue(double C, cx zeta, cx z) {
  const cx base = std::sqrt(1.0 + z) / std::sqrt(1.0 - z);
  return cx{0.0, -1.0} * base * std::exp(0.5 * C * zeta * z);
}

}  // namespace

MapExpr wrap(std::shared_ptr<const detail::ExprNode> n) {
  MapExpr e;
  e.node_ = std::move(n);
  return e;
}

namespace {

using detail::ExprNode;

std::shared_ptr<ExprNode> make_node(ExprKind k) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  return n;
}

void merge_sing(std::vector<cx>& dst, const std::vector<cx>& src) {
  for (cx s : src) {
    bool seen = false;
    for (cx d : dst)
      if (std::abs(d - s) < 1e-12) {
        seen = true;
        break;
      }
    if (!seen) dst.push_back(s);
  }
}

void keep_in_closed_disc(std::vector<cx>& v) {
  std::erase_if(v, [](cx s) { return std::abs(s) > 1.0 + 1e-12; });
}

}  // namespace

ExprKind MapExpr::kind() const { return node_->kind; }

bool MapExpr::closed_form_value() const { return node_->closed_value; }

const std::vector<cx>& MapExpr::singular_points() const { return node_->sing; }

// ---------------------------------------------------------------------------
// Factories

MapExpr identity() { return wrap(make_node(ExprKind::Identity)); }

MapExpr constant(cx c) {
  auto n = make_node(ExprKind::Constant);
  n->a = c;
  return wrap(n);
}

MapExpr affine(cx a, cx b) {
  auto n = make_node(ExprKind::Affine);
  n->a = a;
  n->b = b;
  return wrap(n);
}

MapExpr mobius(cx a) {
  if (std::abs(a) >= 1.0) throw ConfigError("mobius parameter must satisfy |a| < 1");
  auto n = make_node(ExprKind::Mobius);
  n->a = a;
  return wrap(n);
}

MapExpr power(double p) {
  auto n = make_node(ExprKind::Power);
  n->p = p;
  long long e;
  const bool integral = is_integer(p, e);
  if (!integral || e < 0) n->sing.push_back(cx{0.0, 0.0});
  return wrap(n);
}

MapExpr exp_map() { return wrap(make_node(ExprKind::Exp)); }

MapExpr sum(MapExpr u, MapExpr v) {
  auto n = make_node(ExprKind::Sum);
  n->closed_value = u.closed_form_value() && v.closed_form_value();
  merge_sing(n->sing, u.singular_points());
  merge_sing(n->sing, v.singular_points());
  n->kids = {std::move(u), std::move(v)};
  return wrap(n);
}

MapExpr product(MapExpr u, MapExpr v) {
  auto n = make_node(ExprKind::Product);
  n->closed_value = u.closed_form_value() && v.closed_form_value();
  merge_sing(n->sing, u.singular_points());
  merge_sing(n->sing, v.singular_points());
  n->kids = {std::move(u), std::move(v)};
  return wrap(n);
}

MapExpr scale(cx c, MapExpr u) {
  auto n = make_node(ExprKind::Scale);
  n->a = c;
  n->closed_value = u.closed_form_value();
  n->sing = u.singular_points();
  n->kids = {std::move(u)};
  return wrap(n);
}

MapExpr compose(MapExpr outer, MapExpr inner) {
  auto n = make_node(ExprKind::Compose);
  n->closed_value = outer.closed_form_value() && inner.closed_form_value();
  merge_sing(n->sing, inner.singular_points());
  // Pull outer singularities back through invertible inner maps.
  std::vector<cx> pulled;
  for (cx s : outer.singular_points()) {
    switch (inner.kind()) {
      case ExprKind::Identity:
        pulled.push_back(s);
        break;
      case ExprKind::Affine: {
        const cx b = inner.node().b;
        if (std::abs(b) > 0) pulled.push_back((s - inner.node().a) / b);
        break;
      }
      case ExprKind::Mobius:
        // The automorphism is an involution.
        pulled.push_back((inner.node().a - s) /
                         (1.0 - std::conj(inner.node().a) * s));
        break;
      default:
        break;  // conservatively untracked
    }
  }
  keep_in_closed_disc(pulled);
  merge_sing(n->sing, pulled);
  n->kids = {std::move(outer), std::move(inner)};
  return wrap(n);
}

MapExpr koebe() {
  auto n = make_node(ExprKind::Koebe);
  n->sing.push_back(cx{1.0, 0.0});
  return wrap(n);
}

MapExpr odd_poly(int n_idx) {
  if (n_idx < 0) throw ConfigError("odd_poly index must be >= 0");
  auto n = make_node(ExprKind::OddPoly);
  n->n = n_idx;
  return wrap(n);
}

MapExpr neg_power(double p) {
  auto n = make_node(ExprKind::NegPower);
  n->p = p;
  n->sing.push_back(cx{1.0, 0.0});
  return wrap(n);
}

MapExpr example_family(double C, cx zeta) {
  if (std::abs(std::abs(zeta) - 1.0) > 1e-9)
    throw ConfigError("example_family zeta must lie on the unit circle");
  auto n = make_node(ExprKind::ExampleFamily);
  n->p = C;
  n->a = zeta;
  n->closed_value = false;
  n->sing.push_back(cx{1.0, 0.0});
  // f(-1) = 0; cache f(0) so interior evaluations integrate a single leg.
  const QuadResult q = integrate_segment(
      [&](cx z) { return family_dvalue(C, zeta, z); }, cx{-1.0, 0.0},
      cx{0.0, 0.0}, 1e-13);
  n->value_at_zero = q.value;
  return wrap(n);
}

MapExpr primitive_of(MapExpr derivative_expr, cx basepoint, cx basevalue) {
  auto n = make_node(ExprKind::PrimitiveOf);
  n->a = basepoint;
  n->b = basevalue;
  n->closed_value = false;
  n->sing = derivative_expr.singular_points();
  if (basepoint == cx{0.0, 0.0}) {
    n->value_at_zero = basevalue;
  } else {
    const MapExpr& d = derivative_expr;
    const QuadResult q = integrate_segment(
        [&](cx z) { return d.jet_at(z).f; }, basepoint, cx{0.0, 0.0}, 1e-13);
    n->value_at_zero = basevalue + q.value;
  }
  n->kids = {std::move(derivative_expr)};
  return wrap(n);
}

MapExpr quotient(MapExpr u, MapExpr v) {
  return product(std::move(u), compose(power(-1.0), std::move(v)));
}

MapExpr polynomial(const std::vector<cx>& coeffs) {
  if (coeffs.empty()) return constant(cx{0.0, 0.0});
  MapExpr acc = constant(coeffs.back());
  for (std::size_t i = coeffs.size() - 1; i-- > 0;)
    acc = sum(constant(coeffs[i]), product(identity(), std::move(acc)));
  return acc;
}

// ---------------------------------------------------------------------------
// Derivative transform

namespace {

MapExpr derive(const MapExpr& e) {
  const ExprNode& n = e.node();
  switch (n.kind) {
    case ExprKind::Identity:
      return constant(cx{1.0, 0.0});
    case ExprKind::Constant:
      return constant(cx{0.0, 0.0});
    case ExprKind::Affine:
      return constant(n.b);
    case ExprKind::Mobius: {
      // phi_a'(z) = (|a|^2 - 1)/(1 - conj(a) z)^2
      const cx a = n.a;
      const cx c = cx{std::norm(a) - 1.0, 0.0};
      return scale(c, compose(power(-2.0), affine(cx{1.0, 0.0}, -std::conj(a))));
    }
    case ExprKind::Power:
      if (n.p == 0.0) return constant(cx{0.0, 0.0});
      return scale(cx{n.p, 0.0}, power(n.p - 1.0));
    case ExprKind::Exp:
      return exp_map();
    case ExprKind::Sum:
      return sum(n.kids[0].derivative(), n.kids[1].derivative());
    case ExprKind::Product:
      return sum(product(n.kids[0].derivative(), n.kids[1]),
                 product(n.kids[0], n.kids[1].derivative()));
    case ExprKind::Scale:
      return scale(n.a, n.kids[0].derivative());
    case ExprKind::Compose:
      return product(compose(n.kids[0].derivative(), n.kids[1]),
                     n.kids[1].derivative());
    case ExprKind::Koebe:
      // k'(z) = (1+z)/(1-z)^3
      return product(affine(cx{1.0, 0.0}, cx{1.0, 0.0}), neg_power(3.0));
    case ExprKind::OddPoly: {
      const double m = 2.0 * n.n + 1.0;
      return scale(cx{-m, 0.0},
                   compose(power(m - 1.0), affine(cx{1.0, 0.0}, cx{-1.0, 0.0})));
    }
    case ExprKind::NegPower:
      return scale(cx{n.p, 0.0}, neg_power(n.p + 1.0));
    case ExprKind::ExampleFamily: {
      const double C = n.p;
      const cx zeta = n.a;
      const MapExpr base =
          product(compose(power(0.5), affine(cx{1.0, 0.0}, cx{1.0, 0.0})),
                  compose(power(-0.5), affine(cx{1.0, 0.0}, cx{-1.0, 0.0})));
      const MapExpr osc =
          compose(exp_map(), affine(cx{0.0, 0.0}, 0.5 * C * zeta));
      return scale(cx{0.0, -1.0}, product(base, osc));
    }
    case ExprKind::PrimitiveOf:
      return n.kids[0];
  }
  throw ConfigError("unknown expression kind");
}

}  // namespace

MapExpr MapExpr::derivative() const {
  std::call_once(node_->dflag, [this] { node_->dcache = derive(*this); });
  return *node_->dcache;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Jet2 jet_impl(const MapExpr& e, cx z);

Jet2 jet_power(double p, cx z) {
  long long ei;
  if (is_integer(p, ei)) {
    if (ei == 0) return {cx{1.0, 0.0}, cx{}, cx{}};
    if (ei == 1) return {z, cx{1.0, 0.0}, cx{}};
    return {ipow(z, ei), static_cast<double>(ei) * ipow(z, ei - 1),
            static_cast<double>(ei) * static_cast<double>(ei - 1) * ipow(z, ei - 2)};
  }
  return {cpow(z, p), p * cpow(z, p - 1.0), p * (p - 1.0) * cpow(z, p - 2.0)};
}

Jet2 jet_family(const ExprNode& n, cx z) {
  const double C = n.p;
  const cx zeta = n.a;
  const cx e = std::exp(0.5 * C * zeta * z);
  const cx sp = std::sqrt(1.0 + z);
  const cx sm = std::sqrt(1.0 - z);
  const cx minus_i{0.0, -1.0};
  const cx df = minus_i * (sp / sm) * e;
  // f'' = -i e^{C zeta z/2} [ (1+z)^{-1/2}(1-z)^{-3/2} + (C zeta/2)(1+z)^{1/2}(1-z)^{-1/2} ]
  const cx d2f = minus_i * e * (1.0 / (sp * sm * sm * sm) + 0.5 * C * zeta * sp / sm);
  cx f = n.value_at_zero;
  if (z != cx{0.0, 0.0}) {
    const QuadResult q = integrate_segment(
        [&](cx t) { return family_dvalue(C, zeta, t); }, cx{0.0, 0.0}, z,
        kInteriorValueTol);
    f += q.value;
  }
  return {f, df, d2f};
}

Jet2 jet_primitive(const MapExpr& e, cx z) {
  const ExprNode& n = e.node();
  const MapExpr& d = n.kids[0];
  const Jet2 jd = jet_impl(d, z);
  cx f = n.value_at_zero;
  if (z != cx{0.0, 0.0}) {
    const QuadResult q = integrate_segment(
        [&](cx t) { return jet_impl(d, t).f; }, cx{0.0, 0.0}, z,
        kInteriorValueTol);
    f += q.value;
  }
  return {f, jd.f, jd.df};
}

Jet2 jet_impl(const MapExpr& e, cx z) {
  const ExprNode& n = e.node();
  switch (n.kind) {
    case ExprKind::Identity:
      return {z, cx{1.0, 0.0}, cx{}};
    case ExprKind::Constant:
      return {n.a, cx{}, cx{}};
    case ExprKind::Affine:
      return {n.a + n.b * z, n.b, cx{}};
    case ExprKind::Mobius: {
      const cx a = n.a;
      const cx den = 1.0 - std::conj(a) * z;
      const cx c = cx{std::norm(a) - 1.0, 0.0};
      return {(a - z) / den, c / (den * den), 2.0 * std::conj(a) * c / (den * den * den)};
    }
    case ExprKind::Power:
      return jet_power(n.p, z);
    case ExprKind::Exp: {
      const cx w = std::exp(z);
      return {w, w, w};
    }
    case ExprKind::Sum:
      return jet_impl(n.kids[0], z) + jet_impl(n.kids[1], z);
    case ExprKind::Product:
      return jet_impl(n.kids[0], z) * jet_impl(n.kids[1], z);
    case ExprKind::Scale:
      return n.a * jet_impl(n.kids[0], z);
    case ExprKind::Compose: {
      const Jet2 jin = jet_impl(n.kids[1], z);
      const Jet2 jout = jet_impl(n.kids[0], jin.f);
      return chain(jout, jin);
    }
    case ExprKind::Koebe: {
      const cx u = 1.0 - z;
      const cx u2 = u * u;
      return {z / u2, (1.0 + z) / (u2 * u), (4.0 + 2.0 * z) / (u2 * u2)};
    }
    case ExprKind::OddPoly: {
      const double m = 2.0 * n.n + 1.0;
      const cx u = 1.0 - z;
      return {ipow(u, n.n * 2 + 1), -m * ipow(u, n.n * 2),
              m * (m - 1.0) * ipow(u, n.n * 2 - 1)};
    }
    case ExprKind::NegPower: {
      const cx u = 1.0 - z;
      return {cpow(u, -n.p), n.p * cpow(u, -n.p - 1.0),
              n.p * (n.p + 1.0) * cpow(u, -n.p - 2.0)};
    }
    case ExprKind::ExampleFamily:
      return jet_family(n, z);
    case ExprKind::PrimitiveOf:
      return jet_primitive(e, z);
  }
  throw ConfigError("unknown expression kind");
}

}  // namespace

Jet2 MapExpr::jet_at(cx z) const {
  for (cx s : node_->sing)
    if (std::abs(z - s) < kSingularHitRadius)
      throw SingularityError("evaluation at a declared singularity", z);
  return jet_impl(*this, z);
}

Jet2 MapExpr::jet(cx z) const {
  if (!(std::abs(z) < 1.0))
    throw DomainError("evaluation outside the open unit disc", z);
  return jet_at(z);
}

// ---------------------------------------------------------------------------
// Path integration of derivative descriptors

cx integrate_path(const MapExpr& derivative_expr, cx z0, cx z1, double tol) {
  const QuadResult q = integrate_segment(
      [&](cx z) { return derivative_expr.jet_at(z).f; }, z0, z1, tol);
  if (!q.converged)
    throw ConvergenceError("path integral did not meet tolerance within budget");
  return q.value;
}

cx integrate_path_polyline(const MapExpr& derivative_expr,
                           const std::vector<cx>& route, double tol) {
  const QuadResult q = integrate_polyline(
      [&](cx z) { return derivative_expr.jet_at(z).f; }, route, tol);
  if (!q.converged)
    throw ConvergenceError("path integral did not meet tolerance within budget");
  return q.value;
}

}  // namespace udisc
