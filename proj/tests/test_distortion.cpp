#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "udisc/distortion.hpp"

using namespace udisc;

TEST_CASE("envelope integrals against closed forms") {
  // Rational(B): integral is (B/2) log((1+r)(1-R) / ((1-r)(1+R))).
  for (double B : {0.5, 2.0, 4.0}) {
    const Envelope env = Envelope::rational(B);
    for (double r : {0.0, 0.3, 0.9, 0.999}) {
      const double want = 0.5 * B * std::log((1.0 + r) / (1.0 - r));
      CHECK(envelope_integral(env, r) == doctest::Approx(want).epsilon(1e-10));
    }
  }
  CHECK(envelope_integral(Envelope::log_power(1.0, 0.5), 0.0) == 0.0);

  // Self-consistency of the log-power kind under step refinement.
  const Envelope lp = Envelope::log_power(1.0, 0.5);
  const double direct = envelope_integral(lp, 0.9);
  double stepped = 0.0;
  for (int i = 0; i < 8; ++i) {
    const Envelope seg = Envelope::log_power(1.0, 0.5, 0.9 * i / 8.0);
    stepped += envelope_integral(seg, 0.9 * (i + 1) / 8.0);
  }
  CHECK(direct == doctest::Approx(stepped).epsilon(1e-8));
}

TEST_CASE("envelope integral is monotone in r") {
  const std::vector<Envelope> envs{
      Envelope::rational(2.0), Envelope::log_power(1.0, 0.5),
      Envelope::sum_of(Envelope::rational(1.0), Envelope::log_power(1.0, 0.5))};
  for (const Envelope& env : envs) {
    double prev = 0.0;
    for (int k = 1; k <= 16; ++k) {
      const double r = 1.0 - std::pow(2.0, -k);
      const double v = envelope_integral(env, r);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("condition (i) ladder classifications") {
  // phi = 2/(1-t^2): (1-r) exp(log((1+r)/(1-r))) = 1+r -> 2, finite.
  const ConditionIEstimate c2 = condition_i_estimate(Envelope::rational(2.0));
  CHECK(c2.finite);
  CHECK(c2.limsup_estimate == doctest::Approx(2.0).epsilon(1e-3));
  for (const auto& [r, v] : c2.ladder)
    CHECK(v == doctest::Approx(1.0 + r).epsilon(1e-8));

  // phi = 4/(1-t^2): values (1+r)^2/(1-r) blow up.
  const ConditionIEstimate c4 = condition_i_estimate(Envelope::rational(4.0));
  CHECK(!c4.finite);

  // phi = 0: values 1-r -> 0, finite.
  const ConditionIEstimate c0 = condition_i_estimate(Envelope::rational(0.0));
  CHECK(c0.finite);
  CHECK(c0.limsup_estimate < 1e-4);
}

TEST_CASE("condition (ii) integrals") {
  // 2/(1-t^2): integrand (1+s)/(1-s), divergent.
  CHECK(condition_ii_integral(Envelope::rational(2.0)).status ==
        ConditionIIResult::Status::Divergent);

  // 1/(1-t^2): integrand sqrt((1+s)/(1-s)), integral pi/2 + 1.
  const ConditionIIResult c1 = condition_ii_integral(Envelope::rational(1.0));
  CHECK(c1.status == ConditionIIResult::Status::Convergent);
  CHECK(c1.value == doctest::Approx(kPi / 2.0 + 1.0).epsilon(1e-4));

  // psi envelope of the theorem's example: convergent.
  const Envelope psi =
      Envelope::sum_of(Envelope::rational(1.0), Envelope::log_power(1.0, 0.5));
  CHECK(condition_ii_integral(psi).status == ConditionIIResult::Status::Convergent);
}

TEST_CASE("growth bounds along rays") {
  // Identity with phi == 0: |f'| constant 1, both bounds with equality slack.
  const GrowthBoundReport id_rep = growth_bound_check(
      identity(), Envelope::rational(0.0), cx{1.0, 0.0}, 0.1, {0.3, 0.6, 0.9});
  CHECK(id_rep.hypothesis_ok);
  CHECK(id_rep.all_ok);
  for (const auto& row : id_rep.rows)
    CHECK(row.deriv_lhs == doctest::Approx(row.deriv_rhs).epsilon(1e-9));

  // Koebe majorized by 6/(1-t^2) along the positive real ray.
  const GrowthBoundReport k_rep = growth_bound_check(
      koebe(), Envelope::rational(6.0), cx{1.0, 0.0}, 0.1, {0.3, 0.6, 0.9, 0.99});
  CHECK(k_rep.hypothesis_ok);
  CHECK(k_rep.all_ok);

  // The growth family against its own envelope 1/(1-t^2) + C/2.
  const double C = 2.0;
  const Envelope fam_env = Envelope::sum_of(
      Envelope::rational(1.0),
      Envelope::tabulated({{0.0, C / 2.0}, {1.0, C / 2.0}}));
  const GrowthBoundReport f_rep =
      growth_bound_check(example_family(C, cx{0.0, -1.0}), fam_env,
                         cx{0.0, -1.0}, 0.1, {0.3, 0.6, 0.9});
  CHECK(f_rep.hypothesis_ok);
  CHECK(f_rep.all_ok);

  // Hypothesis violation: Koebe against a too-small envelope.
  CHECK_THROWS_AS((void)growth_bound_check(koebe(), Envelope::rational(1.0),
                                           cx{1.0, 0.0}, 0.1, {0.5}),
                  HypothesisError);
}

TEST_CASE("derived sup bound under condition (i)") {
  // With |P(f)| <= phi verified and condition (i) finite, the proof chain
  // bounds |f'(z)|(1-|z|^2) by (1-r^2)|f'(rho)| exp(int_rho^r phi).
  const MapExpr k = koebe();
  const Envelope env = Envelope::rational(6.0);
  const double rho = 0.1;
  const MapExpr dk = k.derivative();
  const double base = std::abs(dk.jet_at(cx{rho, 0.0}).f);
  for (double r : {0.3, 0.7, 0.95, 0.999}) {
    const double lhs = std::abs(dk.jet_at(cx{r, 0.0}).f) * (1.0 - r * r);
    const double rhs = (1.0 - r * r) * base *
                       std::exp(envelope_integral(env, r) - envelope_integral(env, rho));
    CHECK(lhs <= rhs * (1.0 + 1e-6));
  }
}
