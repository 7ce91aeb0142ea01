#include "udisc/disc_geom.hpp"

#include <cmath>

namespace udisc {

double normalize_angle(double t) {
  t = std::fmod(t, 2.0 * kPi);
  if (t > kPi) t -= 2.0 * kPi;
  if (t <= -kPi) t += 2.0 * kPi;
  return t;
}

cx mobius(cx a, cx z) { return (a - z) / (1.0 - std::conj(a) * z); }

double hyperbolic_distance(cx z, cx w) {
  const double r = std::abs(mobius(z, w));
  return 0.5 * std::log((1.0 + r) / (1.0 - r));
}

double chordal_distance(const ChordalValue& z, const ChordalValue& w) {
  if (z.at_infinity && w.at_infinity) return 0.0;
  if (z.at_infinity) return 1.0 / std::sqrt(1.0 + std::norm(w.value));
  if (w.at_infinity) return 1.0 / std::sqrt(1.0 + std::norm(z.value));
  return std::abs(z.value - w.value) /
         (std::sqrt(1.0 + std::norm(z.value)) * std::sqrt(1.0 + std::norm(w.value)));
}

cx segment_point(cx a, cx b, double t) { return mobius(a, mobius(a, b) * t); }

cx hyperbolic_midpoint(cx z1, cx z2) {
  const double rho = std::abs(mobius(z1, z2));
  if (rho < 1e-300) return z1;
  const double tstar = std::tanh(0.5 * std::atanh(rho)) / rho;
  return segment_point(z1, z2, tstar);
}

Disc pseudohyperbolic_disc(cx alpha, double rho) {
  const double a2 = std::norm(alpha);
  const double den = 1.0 - a2 * rho * rho;
  return {alpha * ((1.0 - rho * rho) / den), (1.0 - a2) * rho / den};
}

Disc horodisc(double theta, double a) {
  return {std::polar(a, theta), 1.0 - a};
}

bool carleson_contains(const CarlesonSquare& q, cx z) {
  const double l = q.arclength;
  if (std::abs(z) < 1.0 - l / (2.0 * kPi)) return false;
  if (l >= 2.0 * kPi) return true;
  // half-open arc [theta - l/2, theta + l/2)
  const double d = normalize_angle(std::arg(z) - q.theta_center);
  return d >= -0.5 * l && d < 0.5 * l;
}

}  // namespace udisc
