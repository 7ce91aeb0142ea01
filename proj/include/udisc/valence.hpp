#pragma once

#include <optional>
#include <string>

#include "udisc/boundary.hpp"
#include "udisc/region.hpp"
#include "udisc/operators.hpp"

namespace udisc {

// Adaptive polyline image of the circle |z| = radius (radius = 1: boundary
// extension).  Parameters are strictly increasing inside the window
// (cut, cut + 2 pi) chosen so singular parameters are never crossed; the
// exported CSV normalizes to (-pi, pi].
struct BoundaryTrace {
  std::vector<double> params;
  std::vector<cx> points;
  bool adaptive = true;
  bool closed = true;
  bool budget_exceeded = false;
  double radius = 1.0;
  double chord_tol = 0.0;
  std::function<cx(double)> eval;  // re-evaluation hook for local refinement
};

struct TraceOptions {
  double collar = 1e-4;          // excluded parameter width at singular params
  std::size_t base_points = 1024;
  std::size_t max_points = 400000;
  double turn_limit = 0.2;       // radians per step
  double value_tol = 1e-9;
};

BoundaryTrace trace_boundary(const MapExpr& expr, double chord_tol,
                             double radius = 1.0, const TraceOptions& opt = {});

struct SimpleReport {
  bool simple = true;
  std::optional<std::pair<double, double>> first_intersection;
};

// Pairwise segment-intersection test over non-adjacent trace segments with a
// broad-phase grid; near-tangent hits are re-refined through trace.eval
// before being accepted.
SimpleReport is_simple(const BoundaryTrace& trace);

struct SignChangeOptions {
  double collar = 1e-4;
  std::size_t base_points = 4096;
  int refine_rounds = 2;
  double value_tol = 1e-9;
};

// Sign changes of t -> Re f(e^{it}) on (t0, t1]; the paper counts on (0, pi].
int sign_changes_real(const MapExpr& expr, double t0, double t1,
                      const SignChangeOptions& opt = {});
int sign_changes_real(const MapExpr& expr, const SignChangeOptions& opt = {});

struct WindingOptions {
  double clearance_rel = 1e-6;  // required min |f - w| relative to contour scale
  std::size_t m0 = 1024;
  std::size_t m_max = std::size_t{1} << 20;
  int nudge_budget = 12;
  double value_tol = 1e-9;
  par::Mode mode = par::default_mode();
};

// n(f, r, w) by the argument principle: adaptive trapezoid of f'/(f-w) on
// |z| = r, doubling the step count until the rounding residual is < 0.1 and
// two refinements agree.  Throws ConvergenceError if no admissible contour
// radius is found within the nudge budget.
int winding_number(const MapExpr& expr, cx w, double r,
                   const WindingOptions& opt = {});

struct PreimageSet {
  cx target{};
  std::vector<cx> points;
  std::vector<double> residuals;
  bool cross_checked = false;
  int winding_reference = -1;
};

struct PreimageOptions {
  std::size_t n_seeds = 1024;
  double tol = 1e-9;
  double dedup = 1e-4;  // pseudo-hyperbolic dedup threshold
  bool validate_with_winding = true;
  int max_iter = 48;
  par::Mode mode = par::default_mode();
};

// Newton searches from low-discrepancy seeds; may undercount (cross_checked
// records whether an enclosing winding number agreed).
PreimageSet preimages(const MapExpr& expr, cx w, const Region& region,
                      const PreimageOptions& opt = {});

struct CarlesonSumResult {
  double sum = 0.0;
  double ratio = 0.0;  // sum / sqrt(l(Q))
  std::size_t members = 0;
};

CarlesonSumResult carleson_sum(const PreimageSet& pre, const CarlesonSquare& q);

// (r, n(f,r,w) * sqrt(1-r)) along a radius ladder.
std::vector<std::pair<double, double>> counting_bound_profile(
    const MapExpr& expr, cx w, const std::vector<double>& r_ladder,
    const WindingOptions& opt = {});

// Winding of a closed polyline around w; nullopt if w is too close to the
// polyline or the rounding is ambiguous.
std::optional<int> polyline_winding(const std::vector<cx>& pts, cx w,
                                    double min_dist);

struct CriticalCResult {
  double value = 0.0;
  double lo = 0.0, hi = 0.0;
  bool predicate_noise = false;
  std::vector<std::pair<double, bool>> evaluations;  // (C, simple?)
};

// Bisection on C of is_simple(trace(f_{C,zeta})) down to bracket width tol_C.
CriticalCResult critical_C(cx zeta, double tol_C, const TraceOptions& opt = {});

struct ValenceEstimate {
  std::string method;  // "winding" | "preimage" | "sign-count"
  int value = 0;
  cx at{};
  bool cross_checked = false;
};

struct FamilyValenceScan {
  int valence = 0;             // max polyline winding over the w sample
  cx argmax_w{};
  int sign_changes_half = 0;   // (0, pi]
  int sign_changes_full = 0;   // (-pi, pi]
  std::size_t w_samples = 0;
};

FamilyValenceScan valence_of_family(double C, cx zeta, double radius = 0.999,
                                    const TraceOptions& opt = {});

struct SlopeResult {
  std::vector<std::pair<double, int>> per_C;
  double slope = 0.0;  // least squares through the origin
};

SlopeResult valence_slope(cx zeta, const std::vector<double>& c_list,
                          double radius = 0.999, const TraceOptions& opt = {});

}  // namespace udisc
