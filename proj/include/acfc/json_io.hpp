#pragma once

#include <nlohmann/json.hpp>

#include "acfc/counterexamples.hpp"
#include "acfc/functional_calculus.hpp"
#include "acfc/lp_extrapolation.hpp"
#include "acfc/operator_models.hpp"
#include "acfc/sets_functions.hpp"

namespace acfc {

using json = nlohmann::ordered_json;

// {"num": p, "den": q}
void to_json(json& j, const Rational& r);
Rational rationalFromJson(const json& j);

// {"points": [...], "limitMarkers": [...], "family": "..."}
void to_json(json& j, const CompactRealSet& set);
CompactRealSet setFromJson(const json& j);

// Set fields plus "values": [[re, im], ...] and, when known, "rule".
void to_json(json& j, const BVFunction& f);
BVFunction bvFunctionFromJson(const json& j);

// {"kind": "c0" | "lp" | "sup" | "cSigma", "dimension": d, "p": p | "inf", "set": {...}}
void to_json(json& j, const SpaceTag& tag);
SpaceTag spaceTagFromJson(const json& j);

// {"rows": r, "cols": c, "data": [[re, im], ...] row-major, "domain": tag, "codomain": tag}
void to_json(json& j, const OperatorModel& op);
OperatorModel operatorFromJson(const json& j);

json scalarToJson(Scalar z);
/// Non-finite reals serialize as the strings "inf", "-inf", "nan".
json realToJson(double v);

void to_json(json& j, const ContinuityReport& r);
void to_json(json& j, const HomomorphismReport& r);
void to_json(json& j, const BoundReport& r);
/// Calculus check in the shape {"worstDefect", "witness", "bound", "catalogSize", ...}.
json calculusReportJson(const HomomorphismReport& hom, const BoundReport& bound);

void to_json(json& j, const RangeInclusionReport& r);
void to_json(json& j, const ObstructionReport& r);
void to_json(json& j, const Ell1IsoReport& r);
void to_json(json& j, const BanachLimitReport& r);

void to_json(json& j, const RieszThorinReport& r);
void to_json(json& j, const DualityReport& r);
void to_json(json& j, const ExtensionReport& r);
void to_json(json& j, const AdjointCalculusReport& r);
void to_json(json& j, const PNormSample& s);

}  // namespace acfc
