#pragma once

#include <cstdint>
#include <random>

#include "udisc/jet.hpp"

namespace udisc {

// Deterministic sampling helpers.  mt19937_64 output is specified by the
// standard; doubles are built from raw bits so streams are identical across
// compilers and thread counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform w.r.t. area on the disc D(center, radius).
  cx in_disc(cx center, double radius) {
    const double r = radius * std::sqrt(uniform01());
    const double t = 2.0 * kPi * uniform01();
    return center + cx{r * std::cos(t), r * std::sin(t)};
  }

 private:
  std::mt19937_64 eng_;
};

// Van der Corput radical inverse; bases 2,3,5,7 give the Halton streams used
// for low-discrepancy seeding.
inline double radical_inverse(std::uint64_t i, std::uint32_t base) {
  double inv = 1.0 / base, x = 0.0, scale = inv;
  while (i) {
    x += static_cast<double>(i % base) * scale;
    i /= base;
    scale *= inv;
  }
  return x;
}

// k-th Halton point mapped to the unit square, dimension pair (b1,b2).
inline cx halton_square(std::uint64_t k, std::uint32_t b1 = 2, std::uint32_t b2 = 3) {
  return {radical_inverse(k + 1, b1), radical_inverse(k + 1, b2)};
}

// k-th Halton point mapped to D(center, radius), area-uniform.
inline cx halton_disc(std::uint64_t k, cx center, double radius,
                      std::uint32_t b1 = 2, std::uint32_t b2 = 3) {
  const cx u = halton_square(k, b1, b2);
  const double r = radius * std::sqrt(u.real());
  const double t = 2.0 * kPi * u.imag();
  return center + cx{r * std::cos(t), r * std::sin(t)};
}

}  // namespace udisc
