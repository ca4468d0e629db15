#include "acfc/json_io.hpp"

#include <cmath>
#include <regex>

#include "acfc/errors.hpp"

namespace acfc {

json realToJson(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

namespace {

double realFromJson(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw InvalidArgument("not a real number: " + s);
  }
  return j.get<double>();
}

Scalar scalarFromJson(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgument("scalar must be [re, im]");
  return {realFromJson(j[0]), realFromJson(j[1])};
}

}  // namespace

json scalarToJson(Scalar z) { return json::array({realToJson(z.real()), realToJson(z.imag())}); }

void to_json(json& j, const Rational& r) { j = json{{"num", r.num()}, {"den", r.den()}}; }

Rational rationalFromJson(const json& j) {
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

void to_json(json& j, const CompactRealSet& set) {
  j = json::object();
  j["points"] = set.points();
  j["limitMarkers"] = set.limitMarkers();
  j["family"] = set.familyDescriptor();
}

CompactRealSet setFromJson(const json& j) {
  std::vector<Rational> points;
  for (const auto& p : j.at("points")) points.push_back(rationalFromJson(p));
  std::vector<Rational> markers;
  for (const auto& m : j.value("limitMarkers", json::array())) markers.push_back(rationalFromJson(m));

  const auto family = j.value("family", std::string("generic-finite"));
  static const std::regex sigma0Re(R"(sigma0-truncation\((\d+)\))");
  static const std::regex gridRe(R"(interval-grid\(([^,]+),([^,]+),(\d+)\))");
  std::smatch match;
  std::optional<CompactRealSet> rebuilt;
  if (std::regex_match(family, match, sigma0Re)) {
    rebuilt = CompactRealSet::sigma0(std::stoul(match[1].str()));
  } else if (std::regex_match(family, match, gridRe)) {
    rebuilt = CompactRealSet::intervalGrid(Rational::parse(match[1].str()), Rational::parse(match[2].str()),
                                           std::stoul(match[3].str()));
  }
  auto generic = CompactRealSet::fromPoints(std::move(points), std::move(markers));
  if (rebuilt) {
    if (!(*rebuilt == generic)) throw InvalidArgument("points do not match family " + family);
    return *rebuilt;
  }
  return generic;
}

void to_json(json& j, const BVFunction& f) {
  to_json(j, f.set());
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(scalarToJson(v));
  j["values"] = std::move(values);
  if (f.sourceRule()) j["rule"] = f.sourceRule()->id();
}

BVFunction bvFunctionFromJson(const json& j) {
  auto set = setFromJson(j);
  std::vector<Scalar> values;
  for (const auto& v : j.at("values")) values.push_back(scalarFromJson(v));
  return BVFunction(std::move(set), std::move(values));
}

void to_json(json& j, const SpaceTag& tag) {
  j = json::object();
  switch (tag.kind) {
    case SpaceKind::C0:
      j["kind"] = "c0";
      break;
    case SpaceKind::Sup:
      j["kind"] = "sup";
      break;
    case SpaceKind::Lp:
      j["kind"] = "lp";
      j["p"] = realToJson(tag.p);
      break;
    case SpaceKind::CSigma:
      j["kind"] = "cSigma";
      j["set"] = *tag.set;
      break;
  }
  j["dimension"] = tag.dimension;
}

SpaceTag spaceTagFromJson(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const auto dim = j.at("dimension").get<std::size_t>();
  if (kind == "c0") return SpaceTag::c0(dim);
  if (kind == "sup") return SpaceTag::sup(dim);
  if (kind == "lp") return SpaceTag::lp(realFromJson(j.at("p")), dim);
  if (kind == "cSigma") {
    auto tag = SpaceTag::cSigma(setFromJson(j.at("set")));
    if (tag.dimension != dim) throw InvalidArgument("cSigma tag dimension does not match its set");
    return tag;
  }
  throw InvalidArgument("unknown space kind '" + kind + "'");
}

void to_json(json& j, const OperatorModel& op) {
  j = json::object();
  j["rows"] = op.matrix.rows();
  j["cols"] = op.matrix.cols();
  json data = json::array();
  for (Eigen::Index r = 0; r < op.matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < op.matrix.cols(); ++c) data.push_back(scalarToJson(op.matrix(r, c)));
  }
  j["data"] = std::move(data);
  j["domain"] = op.domain;
  j["codomain"] = op.codomain;
}

OperatorModel operatorFromJson(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (data.size() != static_cast<std::size_t>(rows * cols)) throw InvalidArgument("matrix data has wrong length");
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = scalarFromJson(data[k++]);
  }
  return OperatorModel(std::move(m), spaceTagFromJson(j.at("domain")), spaceTagFromJson(j.at("codomain")));
}

void to_json(json& j, const ContinuityReport& r) {
  j = json{{"continuous", r.continuous},
           {"defect", realToJson(r.defect)},
           {"worstPoint", r.worstPoint},
           {"samples", r.samples}};
}

void to_json(json& j, const HomomorphismReport& r) {
  j = json{{"calculus", r.calculus},
           {"worstDefect", realToJson(r.worstDefect)},
           {"worstLaw", r.worstLaw},
           {"witness", {r.witness.first, r.witness.second}},
           {"unitDefect", realToJson(r.unitDefect)},
           {"catalogSize", r.catalogSize},
           {"tol", realToJson(r.tol)},
           {"pass", r.pass}};
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"calculus", r.calculus},
           {"bound", realToJson(r.bound)},
           {"witness", r.witness},
           {"catalogSize", r.catalogSize},
           {"rulesUsed", r.rulesUsed},
           {"allExact", r.allExact}};
}

json calculusReportJson(const HomomorphismReport& hom, const BoundReport& bound) {
  json j = hom;
  j["bound"] = realToJson(bound.bound);
  j["boundWitness"] = bound.witness;
  j["boundExact"] = bound.allExact;
  return j;
}

void to_json(json& j, const RangeInclusionReport& r) {
  j = json{{"lambda", r.lambda},
           {"leftRulesChecked", r.leftRulesChecked},
           {"rightRulesChecked", r.rightRulesChecked},
           {"worstDefect", realToJson(r.worstDefect)},
           {"witnesses", r.witness.empty() ? json::array() : json::array({r.witness})},
           {"pass", r.pass}};
}

void to_json(json& j, const ObstructionReport& r) {
  j = json{{"n", r.n},
           {"epsilon", realToJson(r.epsilon)},
           {"tailWindow", r.tailWindow},
           {"rule", r.rule},
           {"tailDefect", realToJson(r.tailDefect)},
           {"constraintDefect", realToJson(r.constraintDefect)},
           {"constraintDefectLeft", realToJson(r.constraintDefectLeft)},
           {"constraintDefectRight", realToJson(r.constraintDefectRight)},
           {"witnesses", {{"tailIndex", r.tailWitnessIndex}}},
           {"feasible", r.feasible}};
  if (!r.message.empty()) j["message"] = r.message;
}

void to_json(json& j, const Ell1IsoReport& r) {
  j = json{{"n", r.n},
           {"trials", r.trials},
           {"ratios",
            {{"worstForward", realToJson(r.worstForwardRatio)}, {"worstInverse", realToJson(r.worstInverseRatio)}}},
           {"roundTrip",
            {{"function", realToJson(r.worstFunctionRoundTrip)}, {"vector", realToJson(r.worstVectorRoundTrip)}}},
           {"witnesses", r.worstForwardRule.empty() ? json::array() : json::array({r.worstForwardRule})},
           {"pass", r.pass}};
}

void to_json(json& j, const BanachLimitReport& r) {
  j = json{{"n", r.m},
           {"tSquaredDefect", realToJson(r.tSquaredDefect)},
           {"tNonzero", r.tNonzero},
           {"tNorm", realToJson(r.tNorm)},
           {"sIdempotentDefect", realToJson(r.sIdempotentDefect)},
           {"sKillsFinitelySupported", r.sKillsFinitelySupported},
           {"sFixesConstantDefect", realToJson(r.sFixesConstant)},
           {"finiteCalculusDefect", realToJson(r.finiteCalculusDefect)},
           {"fullCalculusDefect", realToJson(r.fullCalculusDefect)},
           {"witnesses",
            {{"rule", "chi_point_1"},
             {"fullCalculusOnConstant", realToJson(r.disagreementFull)},
             {"finiteCalculusOnConstant", realToJson(r.disagreementFinite)}}},
           {"pass", r.pass}};
}

void to_json(json& j, const RieszThorinReport& r) {
  j = json{{"check", "riesz-thorin"},
           {"p0", realToJson(r.p0)},
           {"p1", realToJson(r.p1)},
           {"theta", realToJson(r.theta)},
           {"pTheta", realToJson(r.pTheta)},
           {"lhs", realToJson(r.lhs)},
           {"rhs", realToJson(r.rhs)},
           {"margin", realToJson(r.margin)},
           {"exactFlags", {r.lhsExact, true, true}},
           {"pass", r.pass}};
}

void to_json(json& j, const DualityReport& r) {
  j = json{{"check", "duality-identity"},
           {"trials", r.trials},
           {"worstDefect", realToJson(r.worstDefect)},
           {"pass", r.pass}};
}

void to_json(json& j, const ExtensionReport& r) {
  json ps = json::array();
  for (double p : r.ps) ps.push_back(realToJson(p));
  j = json{{"check", "extend-calculus-left"},
           {"calculus", r.calculus},
           {"ps", std::move(ps)},
           {"worstDefect", realToJson(std::max(r.consistencyDefect, r.productDefect))},
           {"consistencyDefect", realToJson(r.consistencyDefect)},
           {"productDefect", realToJson(r.productDefect)},
           {"margin", realToJson(1.0 - r.worstBoundRatio)},
           {"worstBoundRatio", realToJson(r.worstBoundRatio)},
           {"exactFlags", {r.allNormsExact}},
           {"catalogSize", r.catalogSize},
           {"pass", r.pass}};
}

void to_json(json& j, const AdjointCalculusReport& r) {
  j = json{{"check", "adjoint-calculus-right"},
           {"calculus", r.calculus},
           {"worstDefect", realToJson(std::max({r.antiProductDefect, r.sumDefect, r.productDefect}))},
           {"antiProductDefect", realToJson(r.antiProductDefect)},
           {"sumDefect", realToJson(r.sumDefect)},
           {"productDefect", realToJson(r.productDefect)},
           {"pairingDefect", realToJson(r.pairingDefect)},
           {"catalogSize", r.catalogSize},
           {"pass", r.pass}};
}

void to_json(json& j, const PNormSample& s) {
  j = json{{"p", realToJson(s.p)}, {"value", realToJson(s.value)}, {"exact", s.exact}};
}

}  // namespace acfc
