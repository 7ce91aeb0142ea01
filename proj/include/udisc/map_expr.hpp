#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "udisc/errors.hpp"
#include "udisc/jet.hpp"

namespace udisc {

// Descriptor algebra for analytic maps of the unit disc.  A MapExpr is an
// immutable expression tree; evaluation produces a second-order jet and every
// node kind has an exact derivative transform, so f', f'' and (through the
// derivative expression) f''' never go through finite differences.
enum class ExprKind {
  Identity,
  Constant,
  Affine,        // a + b z
  Mobius,        // (a - z)/(1 - conj(a) z)
  Power,         // z^p, principal branch
  Exp,
  Sum,
  Product,
  Scale,         // c * u
  Compose,       // outer after inner
  Koebe,         // z/(1-z)^2
  OddPoly,       // (1-z)^(2n+1)
  NegPower,      // (1-z)^(-p)
  ExampleFamily, // f' = -i ((1+z)/(1-z))^(1/2) e^(C zeta z / 2), f(-1) = 0
  PrimitiveOf,   // basevalue + integral of kid from basepoint
};

namespace detail {
struct ExprNode;
}

class MapExpr {
 public:
  MapExpr() = default;

  ExprKind kind() const;

  // Checked evaluation: requires |z| < 1 and z off the declared singular set.
  Jet2 jet(cx z) const;
  cx value(cx z) const { return jet(z).f; }

  // Unchecked variant for boundary extensions and internal composition; still
  // refuses exact singular hits.
  Jet2 jet_at(cx z) const;

  // Exact derivative descriptor (memoized per node).
  MapExpr derivative() const;

  // False when value evaluation requires path integration (PrimitiveOf,
  // ExampleFamily, or anything containing them).
  bool closed_form_value() const;

  // Declared singular points within the closed disc.
  const std::vector<cx>& singular_points() const;

  const detail::ExprNode& node() const { return *node_; }
  bool same_node(const MapExpr& o) const { return node_ == o.node_; }
  explicit operator bool() const { return node_ != nullptr; }

 private:
  friend MapExpr wrap(std::shared_ptr<const detail::ExprNode> n);
  std::shared_ptr<const detail::ExprNode> node_;
};

namespace detail {
struct ExprNode {
  ExprKind kind{};
  cx a{};  // Constant/Scale coefficient, Affine offset, Mobius parameter,
           // PrimitiveOf basepoint, ExampleFamily zeta
  cx b{};  // Affine slope, PrimitiveOf basevalue
  double p = 0.0;  // Power / NegPower exponent, ExampleFamily C
  int n = 0;       // OddPoly index
  std::vector<MapExpr> kids;
  cx value_at_zero{};  // PrimitiveOf/ExampleFamily: cached f(0)
  std::vector<cx> sing;
  bool closed_value = true;

  mutable std::once_flag dflag;
  mutable std::optional<MapExpr> dcache;
};
}  // namespace detail

MapExpr identity();
MapExpr constant(cx c);
MapExpr affine(cx a, cx b);
MapExpr mobius(cx a);
MapExpr power(double p);
MapExpr exp_map();
MapExpr sum(MapExpr u, MapExpr v);
MapExpr product(MapExpr u, MapExpr v);
MapExpr scale(cx c, MapExpr u);
MapExpr compose(MapExpr outer, MapExpr inner);
MapExpr koebe();
MapExpr odd_poly(int n);
MapExpr neg_power(double p);
MapExpr example_family(double C, cx zeta);
MapExpr primitive_of(MapExpr derivative_expr, cx basepoint, cx basevalue);

// u / v realized inside the algebra as u * (z^{-1} ∘ v).
MapExpr quotient(MapExpr u, MapExpr v);

// Small-coefficient polynomial c0 + c1 z + ... built from the combinators.
MapExpr polynomial(const std::vector<cx>& coeffs);

// ∫ f'(z) dz along [z0, z1] where f' is given as a descriptor.  Throws
// ConvergenceError when the subdivision budget cannot reach tol.
cx integrate_path(const MapExpr& derivative_expr, cx z0, cx z1, double tol);
cx integrate_path_polyline(const MapExpr& derivative_expr,
                           const std::vector<cx>& route, double tol);

}  // namespace udisc
