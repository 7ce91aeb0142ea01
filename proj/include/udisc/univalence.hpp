#pragma once

#include <cstdint>
#include <string>

#include "udisc/operators.hpp"
#include "udisc/region.hpp"

namespace udisc {

// Verdict of a pointwise criterion scanned over a region.  worst_margin is
// threshold minus the grid maximum of the scanned quantity, so holds means
// worst_margin >= -tol.
struct CriterionReport {
  std::string criterion_id;
  Region region;
  bool holds = false;
  cx worst_point{};
  double worst_margin = 0.0;
  std::size_t samples_evaluated = 0;
};

// Region grid resolution for criterion scans.
struct GridSpec {
  int max_k = 18;               // radius ladder r_k = 1 - 2^{-k}
  double angular_factor = 8.0;
  double r_cap = 1.0 - 1e-6;
  par::Mode mode = par::default_mode();
};

// Scan max of a |quantity| field over a region grid.  A CriticalPointError at
// a sample surfaces as an infinite quantity at that witness.
struct ScanMax {
  double value = 0.0;
  cx argmax{};
  std::size_t samples = 0;
};
ScanMax scan_region_max(const std::function<double(cx)>& field,
                        const Region& region, const GridSpec& spec);

// Becker's criterion |z P(f)|(1-|z|^2) <= 1 over a region.
CriterionReport becker_verdict(const MapExpr& expr, const Region& region,
                               double tol, const GridSpec& spec = {});
// Unweighted variant |P(f)|(1-|z|^2) <= 1.
CriterionReport becker_unweighted_verdict(const MapExpr& expr,
                                          const Region& region, double tol,
                                          const GridSpec& spec = {});
// Nehari criterion |S(f)|(1-|z|^2)^2 <= 2.
CriterionReport nehari_verdict(const MapExpr& expr, const Region& region,
                               double tol, const GridSpec& spec = {});

// Growth-condition theorem: if |P(f)|(1-|z|^2) <= 1 + C(1-|z|) on the disc,
// f is univalent on the disc when C <= 1 and in every horodisc
// D(a e^{i theta}, 1-a) with a = 1-(1+C)^{-2} otherwise.  Throws
// HypothesisError (with witness) if the growth condition fails on the grid.
struct HvVerdict {
  double C = 0.0;
  bool holds_on_disc = false;
  double horodisc_a = 0.0;
  std::string guarantee;
  double grid_min_margin = 0.0;
  cx grid_worst_point{};
  std::size_t samples = 0;
};
HvVerdict hv_verdict(const MapExpr& expr, double C, double tol,
                     const GridSpec& spec = {});

// max over a fine |z| grid of |z|(1 + C(1-|z|)); the reduction used in the
// C <= 1 branch of the proof.
double becker_reduction_max(double C, int n_samples = 100000);

// Numerical verification of the horodisc proof chain: the unweighted Becker
// quantity of f composed with T(z) = e^{i theta}(a + (1-a) z), a = a(C),
// stays <= 1 on the disc.
CriterionReport horodisc_transform_check(const MapExpr& expr, double C,
                                         double theta, double tol = 1e-6,
                                         const GridSpec& spec = {});

// Majorant of the horodisc lemma: h(t)(1-|z|^2)/(1+C)^2 with
// t = |(C^2+2C)/(C^2+2C+1) + z/(1+C)^2| and h(t) = (1+C(1-t))/(1-t^2).
double lemma41_term(double C, cx z);
ScanMax lemma41_max(double C, const GridSpec& spec = {});
// Interior critical radius t_C = (1+C-sqrt(1+2C))/C of h.
double lemma41_tc(double C);
double lemma41_h(double C, double t);

struct CollisionReport {
  bool found = false;
  cx z1{}, z2{};
  double image_gap = 0.0;
  std::size_t pairs_tested = 0;
  std::uint64_t seed = 0;
};

struct InjectivityOptions {
  double collision_tol = 1e-9;
  double separation_floor = 0.05;  // hyperbolic distance excluding near-equal pairs
  par::Mode mode = par::default_mode();
};

// Empirical falsifier: samples point pairs (Halton + seeded uniform mix) and
// reports the first pair with nearly equal images after local refinement.
// Absence of a collision is evidence, not proof.
CollisionReport injectivity_sample(const MapExpr& expr, const Region& region,
                                   std::size_t n_pairs, std::uint64_t seed,
                                   const InjectivityOptions& opt = {});

enum class LimsupClass {
  ClusteringGuaranteed,        // tail estimate > 6
  NoConclusion,                // tail estimate in [1, 6]
  LocallyUnivalentCompatible,  // eventual values < 1
};

struct LimsupReport {
  std::vector<std::pair<double, double>> values;  // (1-2^{-k}, quantity)
  double tail_estimate = 0.0;
  LimsupClass classification = LimsupClass::NoConclusion;
};

// Radial limsup proxy for |P(f)(w)|(1-|w|^2) along w = (1-2^{-k}) zeta; the
// tail statistic is the max over the last third of the ladder.
LimsupReport local_becker_limsup(const MapExpr& expr, cx zeta_boundary,
                                 int n_points = 36);

const char* limsup_class_name(LimsupClass c);

enum class ConverseMode { Th3, Th2 };

struct ConverseParams {
  double C = 1.0;  // Th3: discs D(C/(1+C) e^{i theta}, 1/(1+C))
  double a = 0.0;  // Th2: horodisc parameter, annulus start
};

// r_a from the Th3 proof: r^2 = (|a| - C/(1+C)) / (|a| (1 - |a| C/(1+C))).
double converse_radius(double C, double abs_a);

// Distortion bounds satisfied by maps univalent in horodiscs:
//   Th3: |P(f)|(1-|z|^2) <= 2 + 4(1 + K(z)),  K = 1/r_a - 1
//   Th2: |P(f)|(1-|z|)   <= 4   on a <= |z| < 1
CriterionReport converse_bound_check(const MapExpr& expr, ConverseMode mode,
                                     const ConverseParams& params,
                                     const GridSpec& spec = {});

}  // namespace udisc
