#pragma once

// Shared test oracles.  Everything here is an independent route to the values
// the library computes analytically: finite differences for jets, closed
// forms for the classical maps, Weierstrass simultaneous iteration for
// polynomial roots.

#include <vector>

#include "udisc/integrate.hpp"
#include "udisc/map_expr.hpp"
#include "udisc/rng.hpp"

namespace udisc::test {

// Fourth-order central differences in the radial direction (keeps the stencil
// away from the principal-branch cut for fractional powers).
struct FdJet {
  cx df{}, d2f{};
};

template <class ValueFn>
FdJet fd_jet(const ValueFn& f, cx z, double h = 1e-3) {
  const cx u = std::abs(z) > 1e-12 ? z / std::abs(z) : cx{1.0, 0.0};
  const cx hh = h * u;
  const cx fm2 = f(z - 2.0 * hh), fm1 = f(z - hh), f0 = f(z), fp1 = f(z + hh),
           fp2 = f(z + 2.0 * hh);
  FdJet out;
  out.df = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * hh);
  out.d2f = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * hh * hh);
  return out;
}

// High-accuracy value of a primitive descriptor, integrated independently of
// the evaluation path (basepoint -> 0 -> z polyline).
inline cx primitive_value_oracle(const MapExpr& expr, cx z, double tol = 1e-13) {
  const detail::ExprNode& n = expr.node();
  cx base, basev;
  MapExpr d = expr.derivative();
  if (expr.kind() == ExprKind::ExampleFamily) {
    base = cx{-1.0, 0.0};
    basev = cx{0.0, 0.0};
  } else {
    base = n.a;
    basev = n.b;
  }
  return basev + integrate_path_polyline(d, {base, cx{0.0, 0.0}, z}, tol);
}

// Weierstrass (Durand-Kerner) roots of c0 + c1 z + ... + cn z^n.
inline std::vector<cx> poly_roots(std::vector<cx> coeffs) {
  while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<cx> roots;
  if (n < 1) return roots;
  for (auto& c : coeffs) c /= coeffs.back();
  auto eval = [&](cx z) {
    cx acc{0.0, 0.0};
    for (int i = n; i >= 0; --i) acc = acc * z + coeffs[i];
    return acc;
  };
  roots.resize(n);
  for (int i = 0; i < n; ++i)
    roots[i] = std::polar(0.4 + 0.3 * i / std::max(1, n - 1),
                          2.0 * kPi * i / n + 0.7);
  for (int it = 0; it < 400; ++it) {
    double moved = 0.0;
    for (int i = 0; i < n; ++i) {
      cx den{1.0, 0.0};
      for (int j = 0; j < n; ++j)
        if (j != i) den *= roots[i] - roots[j];
      const cx delta = eval(roots[i]) / den;
      roots[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  return roots;
}

// Random degree <= 5 polynomial z + sum c_j z^j whose derivative cannot
// vanish on the closed disc (sum of j |c_j| < 1).
inline std::vector<cx> random_schlicht_poly_coeffs(Rng& rng, double budget = 0.8) {
  std::vector<cx> coeffs{cx{0.0, 0.0}, cx{1.0, 0.0}};
  double left = budget;
  for (int j = 2; j <= 5; ++j) {
    const double mag = rng.uniform01() * left / (2.0 * j);
    const double arg = rng.uniform(0.0, 2.0 * kPi);
    coeffs.push_back(std::polar(mag, arg));
    left -= mag * j;
  }
  return coeffs;
}

// A fixed composition tree touching most combinators:
// exp(0.3 z^2 + phi_{0.2+0.1i}(z)) * (1 + z/2)
inline MapExpr composition_tree() {
  const MapExpr inner = sum(scale(cx{0.3, 0.0}, power(2.0)), mobius(cx{0.2, 0.1}));
  return product(compose(exp_map(), inner),
                 affine(cx{1.0, 0.0}, cx{0.5, 0.0}));
}

}  // namespace udisc::test
