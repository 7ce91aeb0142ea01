#pragma once

#include <optional>

#include "udisc/jet.hpp"

namespace udisc {

// Euclidean disc D(center, radius).
struct Disc {
  cx center{};
  double radius = 0.0;
  bool contains(cx z) const { return std::abs(z - center) < radius; }
};

// Boundary-anchored box over the arc of length `arclength` centered at
// e^{i theta_center}.  Arc membership uses the half-open convention
// [theta - l/2, theta + l/2) so partitions are disjoint.
struct CarlesonSquare {
  double theta_center = 0.0;
  double arclength = 2.0 * kPi;
  double side() const { return arclength; }
};

// Point of the Riemann sphere: finite value or infinity.
struct ChordalValue {
  cx value{};
  bool at_infinity = false;
  static ChordalValue infinity() { return {cx{}, true}; }
  static ChordalValue finite(cx z) { return {z, false}; }
};

// Angle normalized to (-pi, pi].
double normalize_angle(double t);

cx mobius(cx a, cx z);
double hyperbolic_distance(cx z, cx w);
double chordal_distance(const ChordalValue& z, const ChordalValue& w);

// Point of the hyperbolic segment [a,b] = { phi_a(phi_a(b) t) : t in [0,1] }.
cx segment_point(cx a, cx b, double t);
cx hyperbolic_midpoint(cx z1, cx z2);

// {z : |phi_alpha(z)| < rho} as a Euclidean disc.
Disc pseudohyperbolic_disc(cx alpha, double rho);

// D(a e^{i theta}, 1 - a), internally tangent to the unit circle.
Disc horodisc(double theta, double a);

bool carleson_contains(const CarlesonSquare& q, cx z);

}  // namespace udisc
