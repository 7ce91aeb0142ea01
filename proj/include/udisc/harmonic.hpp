#pragma once

#include <optional>

#include "udisc/univalence.hpp"

namespace udisc {

// Harmonic map f = h + conj(g) with g(0) = 0 (normalized on construction).
class HarmonicMap {
 public:
  HarmonicMap(MapExpr h, MapExpr g);

  const MapExpr& h() const { return h_; }
  const MapExpr& g() const { return g_; }

  // Jet (omega, omega', omega'') of the dilatation g'/h' at z, computed from
  // the derivative descriptors; a structurally constant dilatation
  // (g = c * h) collapses exactly.
  Jet2 dilatation_jet(cx z) const;

  std::optional<cx> constant_dilatation() const { return const_omega_; }

 private:
  MapExpr h_, g_;
  MapExpr dh_, dg_;
  std::optional<cx> const_omega_;
};

cx dilatation(const HarmonicMap& f, cx z);
double jacobian(const HarmonicMap& f, cx z);

// P(f) = P(h) - conj(w) w' / (1 - |w|^2)
cx harmonic_pre_schwarzian(const HarmonicMap& f, cx z);
// S(f) = S(h) + (conj(w)/(1-|w|^2)) (h''/h' w' - w'') - (3/2)(conj(w) w'/(1-|w|^2))^2
cx harmonic_schwarzian(const HarmonicMap& f, cx z);

// |P(f)|(1-|z|^2) + |w'|(1-|z|^2)/(1-|w|^2); <= 1 implies univalence.
double harmonic_becker_quantity(const HarmonicMap& f, cx z);

struct HarmonicBeckerReport {
  CriterionReport report;
  std::size_t degenerate_points = 0;  // samples with J_f <= 0
  cx first_degenerate{};
};

HarmonicBeckerReport harmonic_becker_verdict(const HarmonicMap& f,
                                             const Region& region, double tol,
                                             const GridSpec& spec = {});

struct SeparationQuery {
  cx z1{}, z2{};
  double C = 1.0;
};

// RHS of the preimage-separation bound
// log((2 - sqrt(C (1-|xi|))) / sqrt(C (1-|xi|))), xi the hyperbolic midpoint.
// Throws HypothesisError when 1-|xi| >= 1/C (bound inapplicable).
double separation_bound(const SeparationQuery& q);
bool separation_check(const HarmonicMap& f, const SeparationQuery& q);

// Hypothesis scan for the separation theorem with configurable weight
// exponent (the delta0 constant is a label, not a verdict input).
struct SeparationHypothesisReport {
  bool holds = false;
  double worst_quantity = 0.0;
  cx worst_point{};
  double delta0 = 0.5;
  double exponent = 2.0;
  std::size_t samples = 0;
};
SeparationHypothesisReport harmonic_separation_hypothesis(
    const HarmonicMap& f, double C, double delta0 = 0.5, double exponent = 2.0,
    const GridSpec& spec = {});

struct OmegaMapReport {
  double max_abs = 0.0;
  cx worst_point{};
  bool hypothesis_falsified = false;  // some |Omega| >= 1
  std::size_t samples = 0;
};

// Omega(z) = (g(z)-g(z0))/(h(z)-h(z0)): into the disc whenever h is univalent
// with starlike image about h(z0).  Values at z near z0 are skipped
// (removable singularity).
OmegaMapReport omega_map_check(const HarmonicMap& f, cx z0,
                               const std::vector<cx>& samples);

}  // namespace udisc
