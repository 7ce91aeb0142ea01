#pragma once

#include <functional>

#include "udisc/jet.hpp"

namespace udisc {

using Integrand = std::function<cx(cx)>;

struct QuadResult {
  cx value{};
  double err_estimate = 0.0;
  int panels = 0;
  bool converged = false;
};

// ∫ g(z) dz over the straight segment [z0, z1], adaptive Gauss–Kronrod 7/15
// panel bisection.  Bisection concentrates panels geometrically toward a
// misbehaving (integrable-singular) endpoint.
QuadResult integrate_segment(const Integrand& g, cx z0, cx z1, double tol,
                             int max_panels = 20000);

// ∫ g(z) dz along the circular arc z = c + r e^{it}, t from t0 to t1.
QuadResult integrate_arc(const Integrand& g, cx center, double radius,
                         double t0, double t1, double tol,
                         int max_panels = 20000);

// Polyline route through the listed vertices.
QuadResult integrate_polyline(const Integrand& g, const std::vector<cx>& pts,
                              double tol);

}  // namespace udisc
