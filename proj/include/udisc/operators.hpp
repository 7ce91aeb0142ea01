#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "udisc/map_expr.hpp"
#include "udisc/par.hpp"

namespace udisc {

// f', f'', f''' at a point, obtained as the jet of the derivative descriptor.
// This is how the Schwarzian gets its third derivative without finite
// differences.
struct DerivJet {
  cx f1{}, f2{}, f3{};
};

DerivJet deriv_jet(const MapExpr& expr, cx z);

inline constexpr double kCriticalThreshold = 1e-300;

cx pre_schwarzian(const MapExpr& expr, cx z);
cx schwarzian(const MapExpr& expr, cx z);
double spherical_derivative(const MapExpr& expr, cx z);

// |z P(f)(z)| (1-|z|^2): left side of Becker's criterion.
double becker_quantity(const MapExpr& expr, cx z);
// |P(f)(z)| (1-|z|^2): the unweighted variant.
double becker_quantity_z(const MapExpr& expr, cx z);
// |S(f)(z)| (1-|z|^2)^2
double nehari_quantity(const MapExpr& expr, cx z);
// (1 + C(1-|z|)) - |P(f)(z)|(1-|z|^2); nonnegative where the growth
// condition holds.
double hv_margin(const MapExpr& expr, double C, cx z);

// Reusable pointwise fields over the disc (hold the derivative descriptors so
// hot grid loops never rebuild or integrate).
std::function<double(cx)> abs_pre_schwarzian_field(const MapExpr& expr);
std::function<double(cx)> abs_schwarzian_field(const MapExpr& expr);
std::function<double(cx)> abs_derivative_field(const MapExpr& expr);

struct NormEstimate {
  double value = 0.0;
  cx argmax{};
  std::vector<std::pair<double, double>> ladder;  // (r, ring sup)
  bool converged = false;
  std::size_t samples = 0;
};

struct SupNormOptions {
  double tol = 1e-6;
  double r_cap = 1.0 - 1e-7;
  int max_k = 24;              // radius ladder r_k = 1 - 2^{-k}
  double angular_factor = 16.0;
  int polish_rounds = 3;
  par::Mode mode = par::default_mode();
};

// Lower-bound estimate of sup |g(z)| (1-|z|^2)^p over the disc by a layered
// polar grid with boundary refinement and golden-section polishing around the
// best point.  `absfield` returns |g(z)|.
NormEstimate weighted_sup_norm(const std::function<double(cx)>& absfield,
                               double p, const SupNormOptions& opt = {});

struct NormInequalityReport {
  NormEstimate pre_schwarzian_norm;   // ||P||_{H^inf_1}
  NormEstimate schwarzian_norm;       // ||S||_{H^inf_2}
  double forward_lhs = 0.0, forward_rhs = 0.0;    // ||S|| <= 4||P|| + ||P||^2/2
  double converse_lhs = 0.0, converse_rhs = 0.0;  // ||P|| <= 2 + 2 sqrt(1 + ||S||/2)
  bool forward_holds = false, converse_holds = false;
};

NormInequalityReport norm_inequality_report(const MapExpr& expr,
                                            const SupNormOptions& opt = {});

NormEstimate bloch_norm(const MapExpr& expr, const SupNormOptions& opt = {});
NormEstimate normal_norm(const MapExpr& expr, const SupNormOptions& opt = {});

}  // namespace udisc
