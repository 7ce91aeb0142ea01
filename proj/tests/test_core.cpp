#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "udisc/boundary.hpp"

using namespace udisc;

namespace {
double rel_err(cx got, cx want) {
  return std::abs(got - want) / (1.0 + std::abs(want));
}
}  // namespace

TEST_CASE("identity jet") {
  const cx z{0.3, 0.1};
  const Jet2 j = identity().jet(z);
  CHECK(j.f == z);
  CHECK(j.df == cx{1.0, 0.0});
  CHECK(j.d2f == cx{0.0, 0.0});
}

TEST_CASE("koebe jet at origin matches the series z + 2z^2 + 3z^3 + ...") {
  const Jet2 j = koebe().jet(cx{0.0, 0.0});
  CHECK(std::abs(j.f) == 0.0);
  CHECK(std::abs(j.df - cx{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(j.d2f - cx{4.0, 0.0}) < 1e-15);
}

TEST_CASE("example family f'(0) = -i zeta-independent") {
  const Jet2 j = example_family(2.0, cx{0.0, -1.0}).jet(cx{0.0, 0.0});
  CHECK(std::abs(j.df - cx{0.0, -1.0}) < 1e-15);
}

TEST_CASE("domain and singularity guards") {
  CHECK_THROWS_AS((void)koebe().jet(cx{1.2, 0.0}), DomainError);
  CHECK_THROWS_AS((void)neg_power(2.0).jet_at(cx{1.0, 0.0}), SingularityError);
}

TEST_CASE("finite-difference consistency across builtins") {
  // Spec-level hygiene: |df - FD(f)|/(1+|df|) < 1e-6 on random points
  // |z| <= 0.9, same for d2f.  Fractional powers are sampled away from the
  // principal-branch cut.
  struct Case {
    MapExpr e;
    bool avoid_cut;
  };
  const std::vector<Case> cases{
      {identity(), false},
      {constant(cx{0.4, -0.2}), false},
      {affine(cx{0.1, 0.2}, cx{-0.7, 0.4}), false},
      {mobius(cx{0.3, -0.4}), false},
      {power(2.0), false},
      {power(1.7), true},
      {exp_map(), false},
      {koebe(), false},
      {odd_poly(2), false},
      {neg_power(1.5), false},
      {test::composition_tree(), false},
  };
  Rng rng(42);
  for (const auto& c : cases) {
    for (int i = 0; i < 200; ++i) {
      cx z = rng.in_disc(cx{0.0, 0.0}, 0.9);
      if (c.avoid_cut && std::abs(std::arg(z)) > kPi - 0.25) z = -z;
      if (std::abs(z) < 0.05) z += cx{0.1, 0.0};
      const Jet2 j = c.e.jet(z);
      const auto fd = test::fd_jet([&](cx w) { return c.e.jet_at(w).f; }, z);
      CHECK(rel_err(j.df, fd.df) < 1e-6);
      CHECK(rel_err(j.d2f, fd.d2f) < 1e-6);
    }
  }
}

TEST_CASE("finite-difference consistency for the integrated family") {
  const MapExpr f = example_family(2.0, cx{0.0, -1.0});
  Rng rng(7);
  for (int i = 0; i < 25; ++i) {
    const cx z = rng.in_disc(cx{0.0, 0.0}, 0.9);
    const Jet2 j = f.jet(z);
    const auto fd = test::fd_jet(
        [&](cx w) { return test::primitive_value_oracle(f, w); }, z);
    CHECK(rel_err(j.df, fd.df) < 1e-6);
    CHECK(rel_err(j.d2f, fd.d2f) < 1e-6);
  }
}

TEST_CASE("composition jets follow the chain rule exactly") {
  const MapExpr g = koebe();
  const MapExpr h = mobius(cx{0.25, -0.15});
  const MapExpr gh = compose(g, h);
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const cx z = rng.in_disc(cx{0.0, 0.0}, 0.95);
    const Jet2 jh = h.jet(z);
    const Jet2 jg = g.jet_at(jh.f);
    const Jet2 jc = gh.jet(z);
    CHECK(rel_err(jc.f, jg.f) < 1e-12);
    CHECK(rel_err(jc.df, jg.df * jh.df) < 1e-12);
    CHECK(rel_err(jc.d2f, jg.d2f * jh.df * jh.df + jg.df * jh.d2f) < 1e-12);
  }
}

TEST_CASE("derivative descriptors match jet components") {
  const std::vector<MapExpr> exprs{koebe(), odd_poly(1), neg_power(2.5),
                                   test::composition_tree()};
  Rng rng(3);
  for (const MapExpr& e : exprs) {
    const MapExpr d = e.derivative();
    for (int i = 0; i < 50; ++i) {
      const cx z = rng.in_disc(cx{0.0, 0.0}, 0.9);
      CHECK(rel_err(d.jet(z).f, e.jet(z).df) < 1e-13);
      CHECK(rel_err(d.jet(z).df, e.jet(z).d2f) < 1e-13);
    }
  }
}

TEST_CASE("integrate_path recovers closed forms") {
  // Constant derivative: the integral is the displacement.
  const cx one = integrate_path(constant(cx{1.0, 0.0}), cx{0.0, 0.0},
                                cx{1.0 - 1e-6, 0.0}, 1e-12);
  CHECK(std::abs(one - cx{1.0 - 1e-6, 0.0}) < 1e-11);

  // Koebe: k(0.5) = 0.5/0.25 = 2 exactly.
  const cx k05 =
      integrate_path(koebe().derivative(), cx{0.0, 0.0}, cx{0.5, 0.0}, 1e-12);
  CHECK(std::abs(k05 - cx{2.0, 0.0}) < 1e-10);
}

TEST_CASE("integrate_path Richardson self-consistency for the family") {
  const MapExpr d = example_family(1.0, cx{1.0, 0.0}).derivative();
  const cx coarse = integrate_path(d, cx{-1.0, 0.0}, cx{0.0, 0.0}, 1e-7);
  const cx fine = integrate_path(d, cx{-1.0, 0.0}, cx{0.0, 0.0}, 1e-7 / 16.0);
  CHECK(std::abs(coarse - fine) < 2e-7);
}

TEST_CASE("path independence over homotopic polylines") {
  const MapExpr d = test::composition_tree().derivative();
  const cx z0{-0.6, 0.1}, z1{0.55, -0.35};
  const double tol = 1e-10;
  const cx direct = integrate_path(d, z0, z1, tol);
  const cx via_a = integrate_path_polyline(d, {z0, cx{0.0, 0.6}, z1}, tol);
  const cx via_b = integrate_path_polyline(d, {z0, cx{0.1, -0.6}, z1}, tol);
  CHECK(std::abs(direct - via_a) < 2.0 * tol);
  CHECK(std::abs(direct - via_b) < 2.0 * tol);
}

TEST_CASE("boundary jets") {
  const Jet2 ji = boundary_jet(identity(), kPi);
  CHECK(std::abs(ji.f - cx{-1.0, 0.0}) < 1e-15);

  // k(-1) = -1/4 by the closed form.
  const Jet2 jk = boundary_jet(koebe(), kPi);
  CHECK(std::abs(jk.f - cx{-0.25, 0.0}) < 1e-12);

  // f(-1) = 0 for the family, any parameters.
  const Jet2 jf = boundary_jet(example_family(2.21, cx{0.0, -1.0}), kPi);
  CHECK(std::abs(jf.f) < 1e-9);

  CHECK_THROWS_AS((void)boundary_jet(example_family(1.0, cx{0.0, -1.0}), 0.0),
                  SingularityError);
}

TEST_CASE("circle cache agrees with direct integration") {
  const MapExpr f = example_family(2.0, cx{0.0, -1.0});
  CircleValues cv(f, 1.0);
  for (double t : {0.3, 1.0, 2.5, kPi, 4.0, 6.0}) {
    const cx via_cache = cv.value(t);
    const cx via_radial = test::primitive_value_oracle(f, std::polar(1.0 - 1e-12, t));
    CHECK(std::abs(via_cache - via_radial) < 1e-6);
  }
}

TEST_CASE("primitive_of generalizes the family") {
  const MapExpr d = example_family(1.5, cx{0.0, 1.0}).derivative();
  const MapExpr p = primitive_of(d, cx{-1.0, 0.0}, cx{0.0, 0.0});
  const MapExpr f = example_family(1.5, cx{0.0, 1.0});
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    const cx z = rng.in_disc(cx{0.0, 0.0}, 0.8);
    CHECK(std::abs(p.jet(z).f - f.jet(z).f) < 1e-9);
  }
}
