#pragma once

#include <string>

#include "udisc/disc_geom.hpp"

namespace udisc {

// Subset of the disc on which criteria and sampling run.
struct Region {
  enum class Kind { WholeDisc, Disc, Horodisc, Annulus, Carleson, HalfDisc };

  Kind kind = Kind::WholeDisc;
  Disc disc{cx{0.0, 0.0}, 1.0};  // Disc / Horodisc payload
  double r_inner = 0.0, r_outer = 1.0;  // Annulus payload
  CarlesonSquare square{};
  cx direction{1.0, 0.0};  // HalfDisc: Re(z conj(direction)) > offset
  double offset = 0.0;

  static Region whole_disc() { return {}; }
  static Region in_disc(cx c, double r) {
    Region g;
    g.kind = Kind::Disc;
    g.disc = {c, r};
    return g;
  }
  static Region in_horodisc(double theta, double a) {
    Region g;
    g.kind = Kind::Horodisc;
    g.disc = horodisc(theta, a);
    return g;
  }
  static Region in_annulus(double r0, double r1) {
    Region g;
    g.kind = Kind::Annulus;
    g.r_inner = r0;
    g.r_outer = r1;
    return g;
  }
  static Region in_carleson(const CarlesonSquare& q) {
    Region g;
    g.kind = Kind::Carleson;
    g.square = q;
    return g;
  }
  static Region in_half_disc(cx dir, double min_dot) {
    Region g;
    g.kind = Kind::HalfDisc;
    g.direction = dir / std::abs(dir);
    g.offset = min_dot;
    return g;
  }

  bool contains(cx z) const {
    if (std::abs(z) >= 1.0) return false;
    switch (kind) {
      case Kind::WholeDisc:
        return true;
      case Kind::Disc:
      case Kind::Horodisc:
        return disc.contains(z);
      case Kind::Annulus:
        return std::abs(z) >= r_inner && std::abs(z) < r_outer;
      case Kind::Carleson:
        return carleson_contains(square, z);
      case Kind::HalfDisc:
        return (z * std::conj(direction)).real() > offset;
    }
    return false;
  }

  // Smallest disc used by rejection samplers and mapped grids.
  Disc bounding_disc() const {
    switch (kind) {
      case Kind::Disc:
      case Kind::Horodisc:
        return disc;
      default:
        return {cx{0.0, 0.0}, 1.0};
    }
  }

  std::string kind_name() const {
    switch (kind) {
      case Kind::WholeDisc: return "disc";
      case Kind::Disc: return "subdisc";
      case Kind::Horodisc: return "horodisc";
      case Kind::Annulus: return "annulus";
      case Kind::Carleson: return "carleson";
      case Kind::HalfDisc: return "halfdisc";
    }
    return "?";
  }
};

}  // namespace udisc
