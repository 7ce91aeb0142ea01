#pragma once

#include <complex>

namespace udisc {

using cx = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;

// Second-order jet of an analytic map at a point: f, f', f''.
// The algebra below is truncated Taylor arithmetic; product/chain/quotient
// rules are exact up to rounding.
struct Jet2 {
  cx f{}, df{}, d2f{};
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.f + b.f, a.df + b.df, a.d2f + b.d2f};
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.f - b.f, a.df - b.df, a.d2f - b.d2f};
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.f * b.f,
          a.df * b.f + a.f * b.df,
          a.d2f * b.f + 2.0 * a.df * b.df + a.f * b.d2f};
}

inline Jet2 operator*(cx c, const Jet2& a) { return {c * a.f, c * a.df, c * a.d2f}; }

inline Jet2 operator/(const Jet2& a, const Jet2& b) {
  const cx q0 = a.f / b.f;
  const cx q1 = (a.df - q0 * b.df) / b.f;
  const cx q2 = (a.d2f - q0 * b.d2f - 2.0 * q1 * b.df) / b.f;
  return {q0, q1, q2};
}

// Jet of g∘h at z from the jet of g at h(z) and the jet of h at z.
inline Jet2 chain(const Jet2& g_at_h, const Jet2& h) {
  return {g_at_h.f,
          g_at_h.df * h.df,
          g_at_h.d2f * h.df * h.df + g_at_h.df * h.d2f};
}

}  // namespace udisc
