#pragma once

#include <string>

#include <json.hpp>

#include "udisc/distortion.hpp"
#include "udisc/harmonic.hpp"
#include "udisc/univalence.hpp"
#include "udisc/valence.hpp"

namespace udisc {

using json = nlohmann::json;

// Complex scalars travel as [re, im]; zeta also accepts "1", "-1", "i", "-i".
json complex_to_json(cx z);
cx complex_from_json(const json& j);
cx zeta_from_json(const json& j);

json expr_to_json(const MapExpr& e);
MapExpr expr_from_json(const json& j);

json region_to_json(const Region& r);
Region region_from_json(const json& j);

json envelope_to_json(const Envelope& e);
Envelope envelope_from_json(const json& j);

json harmonic_to_json(const HarmonicMap& f);
HarmonicMap harmonic_from_json(const json& j);

json norm_estimate_to_json(const NormEstimate& e);
json criterion_report_to_json(const CriterionReport& r);
json collision_report_to_json(const CollisionReport& r);
json hv_verdict_to_json(const HvVerdict& v);
json norm_inequality_to_json(const NormInequalityReport& r);

std::string trace_to_csv(const BoundaryTrace& t);  // header: t,re,im
std::string trace_to_svg(const BoundaryTrace& t, int width = 800);

// FNV-1a over the canonical dump; embedded in every CLI report.
std::string config_hash(const json& config);

}  // namespace udisc
