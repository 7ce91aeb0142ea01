#pragma once

#include <map>

#include "udisc/map_expr.hpp"

namespace udisc {

// Values of f along the circle |z - 0| = r (r = 1 gives the continuous
// boundary extension).  For descriptors whose value requires integration the
// cache anchors once and antidifferentiates along the arc, keeping
// checkpoints on a fixed parameter ladder so repeated queries stay O(1)
// amortized.  Not thread-safe; use one instance per worker.
class CircleValues {
 public:
  CircleValues(MapExpr expr, double radius, double tol = 1e-10);

  // f(r e^{it}); t may be any real, reduced into the window that avoids
  // crossing singular parameters.
  cx value(double t);

  // f'(r e^{it})
  cx dvalue(double t) const;

  // Window (cut, cut + 2 pi) within which parameters are represented.
  double cut() const { return cut_; }
  bool has_singular_param() const { return has_sing_; }
  double reduce(double t) const;

  // Fill every checkpoint rung once; afterwards value() only reads the cache
  // and concurrent queries are safe.
  void prefill();

 private:
  cx point(double t) const { return std::polar(radius_, t); }
  cx checkpoint(long k);

  MapExpr expr_, dexpr_;
  double radius_;
  double tol_;
  bool direct_;    // closed-form values, no cache needed
  bool has_sing_ = false;
  double cut_ = -kPi;
  double anchor_t_ = 0.0;
  cx anchor_f_{};
  std::map<long, cx> cache_;  // ladder index -> value at anchor_t_ + k * step
  static constexpr double kStep = kPi / 512.0;
};

// Jet of the continuous boundary extension at e^{it}: value via arc
// antidifferentiation when needed, f' and f'' from the derivative
// descriptor.  Throws SingularityError at excluded parameters.
Jet2 boundary_jet(const MapExpr& expr, double t);

}  // namespace udisc
