#include "udisc/json_io.hpp"

#include <cmath>
#include <sstream>

#include "udisc/disc_geom.hpp"

namespace udisc {

json complex_to_json(cx z) { return json::array({z.real(), z.imag()}); }

cx complex_from_json(const json& j) {
  if (j.is_number()) return cx{j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2)
    return cx{j[0].get<double>(), j[1].get<double>()};
  throw ConfigError("complex scalar must be a number or [re, im]");
}

cx zeta_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "1") return cx{1.0, 0.0};
    if (s == "-1") return cx{-1.0, 0.0};
    if (s == "i") return cx{0.0, 1.0};
    if (s == "-i") return cx{0.0, -1.0};
    throw ConfigError("zeta string must be one of 1, -1, i, -i");
  }
  return complex_from_json(j);
}

json expr_to_json(const MapExpr& e) {
  const detail::ExprNode& n = e.node();
  json j;
  switch (e.kind()) {
    case ExprKind::Identity:
      j["kind"] = "identity";
      break;
    case ExprKind::Constant:
      j["kind"] = "constant";
      j["c"] = complex_to_json(n.a);
      break;
    case ExprKind::Affine:
      j["kind"] = "affine";
      j["a"] = complex_to_json(n.a);
      j["b"] = complex_to_json(n.b);
      break;
    case ExprKind::Mobius:
      j["kind"] = "mobius";
      j["a"] = complex_to_json(n.a);
      break;
    case ExprKind::Power:
      j["kind"] = "power";
      j["p"] = n.p;
      break;
    case ExprKind::Exp:
      j["kind"] = "exp";
      break;
    case ExprKind::Sum:
      j["kind"] = "sum";
      j["lhs"] = expr_to_json(n.kids[0]);
      j["rhs"] = expr_to_json(n.kids[1]);
      break;
    case ExprKind::Product:
      j["kind"] = "product";
      j["lhs"] = expr_to_json(n.kids[0]);
      j["rhs"] = expr_to_json(n.kids[1]);
      break;
    case ExprKind::Scale:
      j["kind"] = "scale";
      j["c"] = complex_to_json(n.a);
      j["inner"] = expr_to_json(n.kids[0]);
      break;
    case ExprKind::Compose:
      j["kind"] = "compose";
      j["outer"] = expr_to_json(n.kids[0]);
      j["inner"] = expr_to_json(n.kids[1]);
      break;
    case ExprKind::Koebe:
      j["kind"] = "koebe";
      break;
    case ExprKind::OddPoly:
      j["kind"] = "oddpoly";
      j["n"] = n.n;
      break;
    case ExprKind::NegPower:
      j["kind"] = "negpower";
      j["p"] = n.p;
      break;
    case ExprKind::ExampleFamily:
      j["kind"] = "examplefamily";
      j["C"] = n.p;
      j["zeta"] = complex_to_json(n.a);
      break;
    case ExprKind::PrimitiveOf:
      j["kind"] = "primitiveof";
      j["derivative"] = expr_to_json(n.kids[0]);
      j["basepoint"] = complex_to_json(n.a);
      j["basevalue"] = complex_to_json(n.b);
      break;
  }
  return j;
}

MapExpr expr_from_json(const json& j) {
  if (!j.contains("kind")) throw ConfigError("descriptor missing \"kind\"");
  const std::string k = j.at("kind").get<std::string>();
  if (k == "identity") return identity();
  if (k == "constant") return constant(complex_from_json(j.at("c")));
  if (k == "affine")
    return affine(complex_from_json(j.at("a")), complex_from_json(j.at("b")));
  if (k == "mobius") return mobius(complex_from_json(j.at("a")));
  if (k == "power") return power(j.at("p").get<double>());
  if (k == "exp") return exp_map();
  if (k == "sum")
    return sum(expr_from_json(j.at("lhs")), expr_from_json(j.at("rhs")));
  if (k == "product")
    return product(expr_from_json(j.at("lhs")), expr_from_json(j.at("rhs")));
  if (k == "scale")
    return scale(complex_from_json(j.at("c")), expr_from_json(j.at("inner")));
  if (k == "compose")
    return compose(expr_from_json(j.at("outer")), expr_from_json(j.at("inner")));
  if (k == "koebe") return koebe();
  if (k == "oddpoly") return odd_poly(j.at("n").get<int>());
  if (k == "negpower") return neg_power(j.at("p").get<double>());
  if (k == "examplefamily")
    return example_family(j.at("C").get<double>(), zeta_from_json(j.at("zeta")));
  if (k == "primitiveof")
    return primitive_of(expr_from_json(j.at("derivative")),
                        complex_from_json(j.at("basepoint")),
                        complex_from_json(j.at("basevalue")));
  throw ConfigError("unknown descriptor kind: " + k);
}

json region_to_json(const Region& r) {
  json j;
  switch (r.kind) {
    case Region::Kind::WholeDisc:
      j["kind"] = "disc";
      break;
    case Region::Kind::Disc:
      j["kind"] = "subdisc";
      j["center"] = complex_to_json(r.disc.center);
      j["radius"] = r.disc.radius;
      break;
    case Region::Kind::Horodisc:
      j["kind"] = "horodisc";
      j["theta"] = std::arg(r.disc.center);
      j["a"] = std::abs(r.disc.center);
      break;
    case Region::Kind::Annulus:
      j["kind"] = "annulus";
      j["r0"] = r.r_inner;
      j["r1"] = r.r_outer;
      break;
    case Region::Kind::Carleson:
      j["kind"] = "carleson";
      j["theta"] = r.square.theta_center;
      j["arclength"] = r.square.arclength;
      break;
    case Region::Kind::HalfDisc:
      j["kind"] = "halfdisc";
      j["direction"] = complex_to_json(r.direction);
      j["offset"] = r.offset;
      break;
  }
  return j;
}

Region region_from_json(const json& j) {
  const std::string k = j.at("kind").get<std::string>();
  if (k == "disc") return Region::whole_disc();
  if (k == "subdisc")
    return Region::in_disc(complex_from_json(j.at("center")),
                           j.at("radius").get<double>());
  if (k == "horodisc")
    return Region::in_horodisc(j.at("theta").get<double>(),
                               j.at("a").get<double>());
  if (k == "annulus")
    return Region::in_annulus(j.at("r0").get<double>(), j.at("r1").get<double>());
  if (k == "carleson")
    return Region::in_carleson(
        {j.at("theta").get<double>(), j.at("arclength").get<double>()});
  if (k == "halfdisc")
    return Region::in_half_disc(complex_from_json(j.at("direction")),
                                j.at("offset").get<double>());
  throw ConfigError("unknown region kind: " + k);
}

json envelope_to_json(const Envelope& e) {
  json j;
  switch (e.kind) {
    case Envelope::Kind::Rational:
      j["kind"] = "rational";
      j["B"] = e.B;
      break;
    case Envelope::Kind::LogPower:
      j["kind"] = "logpower";
      j["C"] = e.C;
      j["eps"] = e.eps;
      break;
    case Envelope::Kind::Sum: {
      j["kind"] = "sum";
      json kids = json::array();
      for (const Envelope& k : e.kids) kids.push_back(envelope_to_json(k));
      j["terms"] = kids;
      break;
    }
    case Envelope::Kind::Tabulated:
      j["kind"] = "tabulated";
      j["table"] = e.table;
      break;
  }
  j["R"] = e.R;
  return j;
}

Envelope envelope_from_json(const json& j) {
  const std::string k = j.at("kind").get<std::string>();
  const double R = j.value("R", 0.0);
  if (k == "rational") return Envelope::rational(j.at("B").get<double>(), R);
  if (k == "logpower")
    return Envelope::log_power(j.at("C").get<double>(), j.at("eps").get<double>(), R);
  if (k == "sum") {
    const auto& terms = j.at("terms");
    if (terms.size() != 2) throw ConfigError("sum envelope needs two terms");
    Envelope e = Envelope::sum_of(envelope_from_json(terms[0]),
                                  envelope_from_json(terms[1]));
    e.R = R;
    return e;
  }
  if (k == "tabulated") {
    Envelope e = Envelope::tabulated(
        j.at("table").get<std::vector<std::pair<double, double>>>());
    return e;
  }
  throw ConfigError("unknown envelope kind: " + k);
}

json harmonic_to_json(const HarmonicMap& f) {
  return json{{"h", expr_to_json(f.h())}, {"g", expr_to_json(f.g())}};
}

HarmonicMap harmonic_from_json(const json& j) {
  return HarmonicMap(expr_from_json(j.at("h")), expr_from_json(j.at("g")));
}

json norm_estimate_to_json(const NormEstimate& e) {
  json ladder = json::array();
  for (const auto& [r, sup] : e.ladder)
    ladder.push_back(json::array({r, sup}));
  return json{{"value", e.value},
              {"argmax", complex_to_json(e.argmax)},
              {"ladder", ladder},
              {"converged", e.converged},
              {"samples", e.samples}};
}

json criterion_report_to_json(const CriterionReport& r) {
  return json{{"criterion", r.criterion_id},
              {"region", region_to_json(r.region)},
              {"holds", r.holds},
              {"worst_point", complex_to_json(r.worst_point)},
              {"worst_margin", r.worst_margin},
              {"samples", r.samples_evaluated}};
}

json collision_report_to_json(const CollisionReport& r) {
  json j{{"found", r.found},
         {"pairs_tested", r.pairs_tested},
         {"seed", r.seed}};
  if (r.found) {
    j["z1"] = complex_to_json(r.z1);
    j["z2"] = complex_to_json(r.z2);
    j["image_gap"] = r.image_gap;
  }
  return j;
}

json hv_verdict_to_json(const HvVerdict& v) {
  return json{{"C", v.C},
              {"holds_on_disc", v.holds_on_disc},
              {"horodisc_a", v.horodisc_a},
              {"guarantee", v.guarantee},
              {"grid_min_margin", v.grid_min_margin},
              {"grid_worst_point", complex_to_json(v.grid_worst_point)},
              {"samples", v.samples}};
}

json norm_inequality_to_json(const NormInequalityReport& r) {
  return json{{"pre_schwarzian_norm", norm_estimate_to_json(r.pre_schwarzian_norm)},
              {"schwarzian_norm", norm_estimate_to_json(r.schwarzian_norm)},
              {"forward_lhs", r.forward_lhs},
              {"forward_rhs", r.forward_rhs},
              {"forward_holds", r.forward_holds},
              {"converse_lhs", r.converse_lhs},
              {"converse_rhs", r.converse_rhs},
              {"converse_holds", r.converse_holds}};
}

std::string trace_to_csv(const BoundaryTrace& t) {
  std::ostringstream os;
  os.precision(17);
  os << "t,re,im\n";
  for (std::size_t i = 0; i < t.points.size(); ++i)
    os << normalize_angle(t.params[i]) << "," << t.points[i].real() << ","
       << t.points[i].imag() << "\n";
  return os.str();
}

std::string trace_to_svg(const BoundaryTrace& t, int width) {
  double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
  for (cx p : t.points) {
    min_x = std::min(min_x, p.real());
    max_x = std::max(max_x, p.real());
    min_y = std::min(min_y, p.imag());
    max_y = std::max(max_y, p.imag());
  }
  const double w = max_x - min_x, h = max_y - min_y;
  const double pad = 0.02 * std::max(w, h);
  std::ostringstream os;
  os.precision(10);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << min_x - pad
     << " " << -(max_y + pad) << " " << w + 2 * pad << " " << h + 2 * pad
     << "\" width=\"" << width << "\">\n<polyline fill=\"none\" stroke=\"black\""
     << " stroke-width=\"" << (w + 2 * pad) / 800.0 << "\" points=\"";
  for (cx p : t.points) os << p.real() << "," << -p.imag() << " ";
  os << "\"/>\n</svg>\n";
  return os.str();
}

std::string config_hash(const json& config) {
  const std::string s = config.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace udisc
