#pragma once

#include <string>
#include <vector>

#include "udisc/map_expr.hpp"

namespace udisc {

// Radial envelope phi: [R, 1) -> [0, inf) majorizing |P(f)| in the growth
// theorem.  Rational(B) is B/(1-t^2); LogPower(C, eps) is
// C/(1-t^2) (log(e/(1-t)))^{-(1+eps)}.
struct Envelope {
  enum class Kind { Rational, LogPower, Sum, Tabulated };
  Kind kind = Kind::Rational;
  double B = 0.0;
  double C = 0.0;
  double eps = 0.0;
  double R = 0.0;  // domain start
  std::vector<Envelope> kids;
  std::vector<std::pair<double, double>> table;  // (t, phi) sorted

  double operator()(double t) const;

  static Envelope rational(double B, double R = 0.0);
  static Envelope log_power(double C, double eps, double R = 0.0);
  static Envelope sum_of(Envelope a, Envelope b);
  static Envelope tabulated(std::vector<std::pair<double, double>> pts);
};

// ∫_R^r phi(t) dt by adaptive quadrature.
double envelope_integral(const Envelope& env, double r);

struct ConditionIEstimate {
  std::vector<std::pair<double, double>> ladder;  // (r, (1-r) exp ∫)
  double limsup_estimate = 0.0;
  bool finite = false;
};

// (1-r) exp(∫_R^r phi) along the ladder r_k = 1 - 2^{-k}; "finite" when the
// tail stabilizes (max of last third below 10x its median, or the tail is
// non-increasing).
ConditionIEstimate condition_i_estimate(const Envelope& env, int max_k = 24);

struct ConditionIIResult {
  enum class Status { Convergent, Divergent, Indeterminate };
  Status status = Status::Indeterminate;
  double value = 0.0;        // valid when convergent
  double partial_sum = 0.0;  // accumulated either way
  int panels = 0;
};

// ∫_R^1 exp(∫_R^s phi) ds by geometric panels toward 1.  Convergent when the
// projected tail drops below tol; divergent when partial sums pass the cap or
// the panel sums stop decaying.
ConditionIIResult condition_ii_integral(const Envelope& env, double tol = 1e-6);

struct GrowthBoundRow {
  double r = 0.0;
  double deriv_lhs = 0.0, deriv_rhs = 0.0;  // |f'(r zeta)| <= |f'(rho zeta)| exp ∫
  double value_lhs = 0.0, value_rhs = 0.0;  // |f(r zeta)| <= M(rho,f)+M(rho,f') ∫exp∫
  bool deriv_ok = false, value_ok = false;
};

struct GrowthBoundReport {
  bool hypothesis_ok = false;  // |P(f)| <= phi(|z|) along the ray
  cx hypothesis_witness{};
  std::vector<GrowthBoundRow> rows;
  bool all_ok = false;
};

// Pointwise verification of the derived growth bounds along the ray r zeta.
// Throws HypothesisError if |P(f)| <= phi fails on the ray grid.
GrowthBoundReport growth_bound_check(const MapExpr& expr, const Envelope& env,
                                     cx zeta, double rho,
                                     const std::vector<double>& r_list);

const char* condition_ii_status_name(ConditionIIResult::Status s);

}  // namespace udisc
