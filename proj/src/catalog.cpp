#include "acfc/catalog.hpp"

#include <random>

#include "acfc/errors.hpp"

namespace acfc {

namespace {

std::vector<std::string_view> splitCommas(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    parts.push_back(s.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

bool startsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

double parseReal(std::string_view text, std::string_view context) {
  try {
    return Rational::parse(text).toDouble();
  } catch (const std::exception&) {
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(text), &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("bad coefficient '" + std::string(text) + "' in '" +
                        std::string(context) + "'");
}

std::size_t parseCount(std::string_view text, std::string_view context) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(std::string(text), &used);
    if (used == text.size() && v > 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw InvalidArgument("bad count '" + std::string(text) + "' in '" + std::string(context) +
                        "'");
}

FunctionRule parseIntervalRule(std::string_view id) {
  const std::string_view body = id.substr(4);
  if (body.size() < 5) throw InvalidArgument("bad interval rule '" + std::string(id) + "'");
  const char open = body.front();
  const char close = body.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')')) {
    throw InvalidArgument("bad interval brackets in '" + std::string(id) + "'");
  }
  const auto ends = splitCommas(body.substr(1, body.size() - 2));
  if (ends.size() != 2) throw InvalidArgument("interval needs two endpoints: '" + std::string(id) + "'");
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  if (ends[0] != "-inf") lo = Rational::parse(ends[0]);
  if (ends[1] != "inf" && ends[1] != "+inf") hi = Rational::parse(ends[1]);
  return FunctionRule::interval(lo, open == '[', hi, close == ']').withId(std::string(id));
}

}  // namespace

FunctionRule parseRule(std::string_view id) {
  const std::string name(id);
  if (id == "one") return FunctionRule::constant(1.0).withId(name);
  if (id == "zero") return FunctionRule::constant(0.0).withId(name);
  if (id == "id") return FunctionRule::identity().withId(name);
  if (startsWith(id, "poly:")) {
    std::vector<Scalar> ascending;
    const auto parts = splitCommas(id.substr(5));
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      ascending.emplace_back(parseReal(*it, id), 0.0);
    }
    return FunctionRule::polynomial(std::move(ascending)).withId(name);
  }
  if (startsWith(id, "chi:")) return parseIntervalRule(id);

  struct Prefix {
    std::string_view text;
    FunctionRule (*make)(Rational);
  };
  static constexpr Prefix prefixes[] = {
      {"chi_leq_", &FunctionRule::atMost},  {"chi_lt_", &FunctionRule::below},
      {"chi_geq_", &FunctionRule::atLeast}, {"chi_gt_", &FunctionRule::above},
      {"chi_point_", &FunctionRule::point},
  };
  for (const auto& p : prefixes) {
    if (startsWith(id, p.text)) return p.make(Rational::parse(id.substr(p.text.size()))).withId(name);
  }
  throw InvalidArgument("unknown rule '" + name + "'");
}

CompactRealSet parseSet(std::string_view descriptor) {
  if (startsWith(descriptor, "sigma0:")) {
    return CompactRealSet::sigma0(parseCount(descriptor.substr(7), descriptor));
  }
  if (startsWith(descriptor, "grid:")) {
    const auto parts = splitCommas(descriptor.substr(5));
    if (parts.size() != 3) throw InvalidArgument("grid needs a,b,n: '" + std::string(descriptor) + "'");
    return CompactRealSet::intervalGrid(Rational::parse(parts[0]), Rational::parse(parts[1]),
                                        parseCount(parts[2], descriptor));
  }
  if (startsWith(descriptor, "points:")) {
    std::vector<Rational> pts;
    for (auto p : splitCommas(descriptor.substr(7))) pts.push_back(Rational::parse(p));
    return CompactRealSet::fromPoints(std::move(pts));
  }
  throw InvalidArgument("unknown set descriptor '" + std::string(descriptor) + "'");
}

std::vector<FunctionRule> standardCatalog() {
  return {
      parseRule("one"),
      parseRule("id"),
      parseRule("poly:1,0,0"),
      parseRule("poly:3,0,-2,1"),
      parseRule("chi_leq_0"),
      parseRule("chi_gt_0"),
      parseRule("chi_point_0"),
      parseRule("chi_point_-1"),
      parseRule("chi:[-1/3,1/4]"),
      parseRule("chi_leq_-1/3"),
      (parseRule("id") * parseRule("chi_gt_0")).withId("id*chi_gt_0"),
      (Scalar(0.0, 1.0) * parseRule("poly:1,0,0") + parseRule("chi_geq_1/4"))
          .withId("i*t^2+chi_geq_1/4"),
  };
}

std::vector<FunctionRule> monomialCatalog(int maxDegree) {
  std::vector<FunctionRule> out;
  for (int d = 0; d <= maxDegree; ++d) {
    std::vector<Scalar> c(static_cast<std::size_t>(d) + 1, 0.0);
    c.back() = 1.0;
    out.push_back(FunctionRule::polynomial(std::move(c)));
  }
  return out;
}

std::vector<FunctionRule> continuousPart(const std::vector<FunctionRule>& catalog,
                                         const CompactRealSet& set) {
  std::vector<FunctionRule> out;
  for (const auto& f : catalog) {
    if (isContinuousAtMarkers(f, set)) out.push_back(f);
  }
  return out;
}

FunctionRule randomRule(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  const auto leaves = standardCatalog();
  std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
  std::uniform_int_distribution<int> terms(1, 4);
  FunctionRule f = coeff(rng) * leaves[pick(rng)];
  for (int t = terms(rng); t > 1; --t) {
    const FunctionRule leaf = leaves[pick(rng)];
    if (rng() % 3 == 0) {
      f = f * leaf;
    } else {
      f = f + coeff(rng) * leaf;
    }
  }
  return f.withId("random:" + std::to_string(seed));
}

}  // namespace acfc
