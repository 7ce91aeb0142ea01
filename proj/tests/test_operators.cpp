#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "udisc/disc_geom.hpp"
#include "udisc/operators.hpp"

using namespace udisc;

TEST_CASE("pre-Schwarzian closed forms") {
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const cx z = rng.in_disc(cx{0.0, 0.0}, 0.9);
    CHECK(std::abs(pre_schwarzian(identity(), z)) == 0.0);
    // P((1-z)^{-p}) = (p+1)/(1-z), symbolic differentiation oracle.
    const double p = 1.0 + 3.0 * rng.uniform01();
    const cx want = (p + 1.0) / (1.0 - z);
    CHECK(std::abs(pre_schwarzian(neg_power(p), z) - want) < 1e-12 * std::abs(want) + 1e-13);
  }
  CHECK(std::abs(pre_schwarzian(koebe(), cx{0.0, 0.0}) - cx{4.0, 0.0}) < 1e-14);
}

TEST_CASE("Schwarzian closed forms and invariances") {
  Rng rng(21);
  // S of affine maps vanishes.
  const MapExpr aff = affine(cx{0.3, -0.2}, cx{1.4, 0.6});
  for (int i = 0; i < 10; ++i)
    CHECK(std::abs(schwarzian(aff, rng.in_disc(cx{0.0, 0.0}, 0.9))) < 1e-14);

  // S(k)(z) = -6/(1-z^2)^2; cross-checked against finite differences of P.
  const MapExpr k = koebe();
  CHECK(std::abs(schwarzian(k, cx{0.0, 0.0}) - cx{-6.0, 0.0}) < 1e-12);
  for (int i = 0; i < 30; ++i) {
    const cx z = rng.in_disc(cx{0.0, 0.0}, 0.85);
    const cx den = 1.0 - z * z;
    CHECK(std::abs(schwarzian(k, z) - (-6.0) / (den * den)) < 1e-10);
    const auto fd = test::fd_jet([&](cx w) { return pre_schwarzian(k, w); }, z);
    const cx p = pre_schwarzian(k, z);
    CHECK(std::abs(schwarzian(k, z) - (fd.df - 0.5 * p * p)) < 1e-7);
  }

  // Inner Mobius composition: S(f ∘ phi_a)(z) = S(f)(phi_a(z)) phi_a'(z)^2.
  const cx a{0.3, 0.25};
  const MapExpr comp = compose(k, mobius(a));
  for (int i = 0; i < 40; ++i) {
    const cx z = rng.in_disc(cx{0.0, 0.0}, 0.8);
    const cx phi = mobius(a, z);
    const cx dphi = (std::norm(a) - 1.0) / ((1.0 - std::conj(a) * z) * (1.0 - std::conj(a) * z));
    CHECK(std::abs(schwarzian(comp, z) - schwarzian(k, phi) * dphi * dphi) < 1e-9);
  }

  // Outer Mobius M(w) = (w-0.2)/(1+0.5w) leaves S unchanged.
  const MapExpr m_of_k =
      quotient(sum(k, constant(cx{-0.2, 0.0})),
               sum(constant(cx{1.0, 0.0}), scale(cx{0.5, 0.0}, k)));
  for (int i = 0; i < 40; ++i) {
    const cx z = rng.in_disc(cx{0.0, 0.0}, 0.8);
    CHECK(std::abs(schwarzian(m_of_k, z) - schwarzian(k, z)) < 1e-9);
  }
}

TEST_CASE("chain rule identity for the pre-Schwarzian") {
  // P(f∘T)(z) = P(f)(T(z)) T'(z) + P(T)(z)
  Rng rng(22);
  const MapExpr f = koebe();
  const MapExpr t = test::composition_tree();
  const MapExpr ft = compose(f, t);
  for (int i = 0; i < 60; ++i) {
    const cx z = rng.in_disc(cx{0.0, 0.0}, 0.6);
    const Jet2 jt = t.jet(z);
    if (std::abs(jt.f) >= 1.0) continue;  // keep T(z) inside the disc
    const cx lhs = pre_schwarzian(ft, z);
    const cx rhs = pre_schwarzian(f, jt.f) * jt.df + pre_schwarzian(t, z);
    CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("spherical derivative") {
  CHECK(spherical_derivative(identity(), cx{0.0, 0.0}) == 1.0);
  CHECK(spherical_derivative(constant(cx{0.3, 0.4}), cx{0.2, 0.2}) == 0.0);
  // k(0.5) = 2, k'(0.5) = 12: 12/(1+4) = 2.4.
  CHECK(spherical_derivative(koebe(), cx{0.5, 0.0}) ==
        doctest::Approx(2.4).epsilon(1e-12));
}

TEST_CASE("becker quantities") {
  Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    const cx z = rng.in_disc(cx{0.0, 0.0}, 0.9);
    CHECK(becker_quantity(identity(), z) == 0.0);
  }
  // (1-z)^{-p} on the real axis: (p+1)(1+r).
  for (double p : {1.0, 3.0}) {
    for (double r : {0.0, 0.3, 0.7, 0.95}) {
      CHECK(becker_quantity_z(neg_power(p), cx{r, 0.0}) ==
            doctest::Approx((p + 1.0) * (1.0 + r)).epsilon(1e-12));
    }
  }
  // (1-z)^{2n+1}: |P|(1-|z|^2) = 2n (1-|z|^2)/|1-z| -> 4n radially.
  for (int n : {1, 2}) {
    for (double r : {0.5, 0.9, 0.999}) {
      CHECK(becker_quantity_z(odd_poly(n), cx{r, 0.0}) ==
            doctest::Approx(2.0 * n * (1.0 + r)).epsilon(1e-12));
    }
  }
}

TEST_CASE("nehari quantity on the Koebe function") {
  Rng rng(24);
  for (int i = 0; i < 50; ++i) {
    const double x = rng.uniform(-0.999, 0.999);
    CHECK(std::abs(nehari_quantity(koebe(), cx{x, 0.0}) - 6.0) < 1e-10);
  }
  CHECK(nehari_quantity(koebe(), cx{0.0, 0.5}) == doctest::Approx(2.16).epsilon(1e-12));
  CHECK(nehari_quantity(affine(cx{0.1, 0.0}, cx{2.0, 1.0}), cx{0.3, 0.3}) == 0.0);
}

TEST_CASE("hv margin") {
  CHECK(hv_margin(identity(), 1.0, cx{0.4, 0.2}) > 0.0);
  // The family satisfies its own growth condition.
  const MapExpr f = example_family(3.0, cx{0.0, -1.0});
  Rng rng(25);
  for (int i = 0; i < 100; ++i)
    CHECK(hv_margin(f, 3.0, rng.in_disc(cx{0.0, 0.0}, 0.999)) >= -1e-12);
  // Koebe violates it well inside the disc.
  CHECK(hv_margin(koebe(), 1.0, cx{0.9, 0.0}) < 0.0);
}

TEST_CASE("family pre-Schwarzian closed form") {
  // P(f) = 1/(1-z^2) + C zeta / 2.
  Rng rng(26);
  for (double C : {0.5, 2.0, 30.0}) {
    for (cx zeta : {cx{1.0, 0.0}, cx{0.0, -1.0}}) {
      const MapExpr f = example_family(C, zeta);
      for (int i = 0; i < 25; ++i) {
        const cx z = rng.in_disc(cx{0.0, 0.0}, 0.95);
        const cx want = 1.0 / (1.0 - z * z) + 0.5 * C * zeta;
        CHECK(std::abs(pre_schwarzian(f, z) - want) < 1e-10 * (1.0 + std::abs(want)));
      }
    }
  }
}

TEST_CASE("weighted sup norm on reference fields") {
  // Constant field, p = 0.
  const NormEstimate c = weighted_sup_norm([](cx) { return 2.5; }, 0.0);
  CHECK(c.value == doctest::Approx(2.5).epsilon(1e-12));

  SupNormOptions opt;
  const NormEstimate np = weighted_sup_norm(abs_pre_schwarzian_field(koebe()), 1.0, opt);
  CHECK(np.value == doctest::Approx(6.0).epsilon(1e-3));
  CHECK(np.value <= 6.0 + 1e-9);
  for (const auto& [r, sup] : np.ladder) CHECK(sup <= np.value + 1e-12);

  const NormEstimate n2 = weighted_sup_norm(abs_pre_schwarzian_field(odd_poly(2)), 1.0, opt);
  CHECK(n2.value == doctest::Approx(8.0).epsilon(5e-2 / 8.0));
  CHECK(n2.value <= 8.0 + 1e-9);
}

TEST_CASE("norm inequality report on the Koebe function") {
  const NormInequalityReport rep = norm_inequality_report(koebe());
  CHECK(rep.forward_holds);
  CHECK(rep.converse_holds);
  CHECK(rep.schwarzian_norm.value == doctest::Approx(6.0).epsilon(1e-6));
  CHECK(rep.converse_rhs - rep.converse_lhs < 1e-2);
}

TEST_CASE("norm inequalities hold for random small polynomials") {
  Rng rng(27);
  for (int t = 0; t < 5; ++t) {
    const MapExpr f = polynomial(test::random_schlicht_poly_coeffs(rng));
    SupNormOptions opt;
    opt.max_k = 16;
    opt.angular_factor = 4.0;
    const NormInequalityReport rep = norm_inequality_report(f, opt);
    CHECK(rep.forward_holds);
    CHECK(rep.converse_holds);
  }
}

TEST_CASE("Bloch and normal norms as Lipschitz constants") {
  // ||f||_B: |f(z)-f(w)| <= (||f||_B + tol) d_H(z,w);
  // ||f||_N: chordal analogue.
  const MapExpr f = primitive_of(neg_power(1.0), cx{0.0, 0.0}, cx{0.0, 0.0});
  SupNormOptions opt;
  opt.max_k = 20;
  const double bloch = bloch_norm(f, opt).value;
  CHECK(bloch <= 4.0 + 1e-9);  // |f'|(1-|z|^2) = (1-|z|^2)/|1-z| <= 1+|z|
  Rng rng(28);
  for (int i = 0; i < 60; ++i) {
    const cx z = rng.in_disc(cx{0.0, 0.0}, 0.93);
    const cx w = rng.in_disc(cx{0.0, 0.0}, 0.93);
    const double dh = hyperbolic_distance(z, w);
    CHECK(std::abs(f.jet(z).f - f.jet(w).f) <= (bloch + 1e-6) * dh + 1e-12);
  }

  const MapExpr id = identity();
  const double nnorm = normal_norm(id, opt).value;
  CHECK(nnorm == doctest::Approx(1.0).epsilon(1e-6));
  for (int i = 0; i < 60; ++i) {
    const cx z = rng.in_disc(cx{0.0, 0.0}, 0.95);
    const cx w = rng.in_disc(cx{0.0, 0.0}, 0.95);
    const double lhs = chordal_distance(ChordalValue::finite(z), ChordalValue::finite(w));
    CHECK(lhs <= (nnorm + 1e-6) * hyperbolic_distance(z, w) + 1e-12);
  }
}

TEST_CASE("critical point error") {
  // f(z) = z^2 has f'(0) = 0.
  CHECK_THROWS_AS((void)pre_schwarzian(power(2.0), cx{0.0, 0.0}), CriticalPointError);
}
