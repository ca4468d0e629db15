#include "acfc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "acfc/catalog.hpp"
#include "acfc/errors.hpp"

namespace acfc::cli {

namespace {

/// Parameter problem detected after parsing; the message names the flag.
class ParameterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string renderValue(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

json named(std::string name, json body, bool pass) {
  json j = json::object();
  j["name"] = std::move(name);
  for (auto& [k, v] : body.items()) {
    if (k != "pass") j[k] = v;
  }
  j["pass"] = pass;
  return j;
}

CompactRealSet configuredSet(const RunConfig& c) {
  if (c.set.empty()) return CompactRealSet::sigma0(c.n);
  try {
    return parseSet(c.set);
  } catch (const InvalidArgument& e) {
    throw ParameterError(std::string("--set: ") + e.what());
  }
}

std::size_t evenAtLeastFour(std::size_t n) { return std::max<std::size_t>(4, n + (n % 2)); }

// -- individual suites -------------------------------------------------------

json setBuild(const RunConfig& c) { return named("set", json{{"set", configuredSet(c)}}, true); }

json normOf(const RunConfig& c) {
  if (c.rule.empty()) throw ParameterError("--rule: required for 'norm'");
  FunctionRule rule = FunctionRule::constant(0.0);
  try {
    rule = parseRule(c.rule);
  } catch (const InvalidArgument& e) {
    throw ParameterError(std::string("--rule: ") + e.what());
  }
  const auto set = configuredSet(c);
  const auto f = restrict(rule, set);
  const bool ac = isContinuousAtMarkers(rule, set);
  json body{{"rule", rule.id()},
            {"set", set.familyDescriptor()},
            {"supNorm", realToJson(supNorm(f))},
            {"variation", realToJson(variation(f))},
            {"bvNorm", realToJson(bvNorm(f))},
            {"continuousAtLimitPoints", ac},
            {"acNorm", ac ? realToJson(bvNorm(f)) : json(nullptr)}};
  return named("norm", std::move(body), true);
}

json algebraSuite(const RunConfig& c) {
  const auto set = CompactRealSet::sigma0(c.n);
  const auto catalog = standardCatalog();
  double subadditivity = 0.0;
  double submultiplicativity = 0.0;
  for (const auto& f : catalog) {
    const auto bf = restrict(f, set);
    for (const auto& g : catalog) {
      const auto bg = restrict(g, set);
      subadditivity = std::max(subadditivity, variation(add(bf, bg)) - variation(bf) - variation(bg));
      submultiplicativity = std::max(submultiplicativity, bvNorm(mul(bf, bg)) - bvNorm(bf) * bvNorm(bg));
    }
  }
  const double scale = 1e-12;
  json body{{"set", set.familyDescriptor()},
            {"catalogSize", catalog.size()},
            {"subadditivityExcess", realToJson(subadditivity)},
            {"submultiplicativityExcess", realToJson(submultiplicativity)}};
  return named("function-algebra", std::move(body), subadditivity <= scale && submultiplicativity <= scale);
}

std::vector<json> calculusCheck(const RunConfig& c) {
  const auto catalog = standardCatalog();
  const auto set = CompactRealSet::sigma0(c.n);
  const auto diag = diagonalCalculus(set);
  const auto [u, uInv] = uIsoC0(c.n);
  const auto conj = conjugatedCalculus(diag, u, uInv);
  const std::size_t phiN = std::max<std::size_t>(2, c.n);
  const Rational omega = Rational(1) + set.max();
  NormOptions options;
  options.seed = c.seed;

  std::vector<CalculusMap> calculi{
      diag,
      conj,
      phi1(phiN),
      phi2(phiN),
      directSumCalculus(diag, omega, 2),
      idempotentCalculus(randomIdempotent(6, 3, c.seed), SpaceTag::sup(6)),
  };
  std::vector<json> out;
  for (const auto& calc : calculi) {
    const auto hom = homomorphismCheck(calc, catalog, c.tol);
    const auto bound = calculusBound(calc, catalog, BoundNorm::BV, options);
    json body = calculusReportJson(hom, bound);
    bool pass = hom.pass;
    if (&calc == &calculi[0]) {
      pass = pass && bound.bound <= 1.0 + c.tol;
    } else if (&calc == &calculi[1]) {
      const double isoBound = operatorNorm(u).value * operatorNorm(uInv).value;
      body["isoBound"] = realToJson(isoBound);
      pass = pass && bound.bound <= isoBound + c.tol;
    }
    out.push_back(named("calculus:" + calc.name(), std::move(body), pass));
  }
  return out;
}

std::vector<json> c0Demo(const RunConfig& c) {
  if (c.n < 3) throw ParameterError("--n: c0-no-extension needs n >= 3");
  const std::size_t window = std::min<std::size_t>(5, (c.n - 1) / 2);
  std::vector<json> out;
  for (double eps : {0.0, 0.01, 0.1}) {
    const auto r = c0ObstructionDemo(c.n, eps, window);
    const bool pass = r.feasible && r.tailDefect == 1.0 && r.constraintDefect <= eps &&
                      (eps != 0.0 || r.constraintDefect == 0.0);
    out.push_back(named("c0-no-extension:eps=" + renderValue(realToJson(eps)), json(r), pass));
  }
  // Continuous rule: the tail defect must shrink along n/8, n/4, n/2, n.
  const auto rule = parseRule("poly:1,0");
  json sequence = json::array();
  double previous = std::numeric_limits<double>::infinity();
  bool monotone = true;
  std::vector<double> defects;
  for (std::size_t divisor : {8, 4, 2, 1}) {
    const std::size_t m = c.n / divisor;
    if (m <= 2 * window) continue;
    const auto r = c0ObstructionDemo(m, 0.0, window, rule);
    sequence.push_back(json{{"n", r.n}, {"tailDefect", realToJson(r.tailDefect)}});
    monotone = monotone && r.feasible && r.tailDefect <= previous;
    previous = r.tailDefect;
    defects.push_back(r.tailDefect);
  }
  const bool shrinks = defects.size() < 2 || defects.back() < defects.front();
  out.push_back(named("c0-continuous-tail",
                      json{{"rule", rule.id()}, {"tailWindow", window}, {"tailDefects", std::move(sequence)}},
                      monotone && shrinks));
  return out;
}

json ell1Demo(const RunConfig& c) {
  if (c.n % 2 != 0 || c.n < 4) throw ParameterError("--n: ell1-iso needs an even value >= 4 (got " + std::to_string(c.n) + ")");
  const auto r = ell1IsoDemo(c.n, c.trials, c.seed);
  return named("ell1-iso", json(r), r.pass);
}

json nonuniqueDemo(const RunConfig& c) {
  if (c.n < 2) throw ParameterError("--n: nonunique-extensions needs n >= 2");
  const auto p1 = phi1(c.n);
  const auto p2 = phi2(c.n);
  const auto witness = parseRule("chi_point_0");
  const Matrix w1 = p1.matrix(witness);
  const Matrix w2 = p2.matrix(witness);
  const auto dim = static_cast<Eigen::Index>(c.n + 1);
  Matrix expected1 = Matrix::Zero(dim, dim);
  expected1(0, 0) = 1.0;
  const bool witnessOk = w1 == expected1 && w2 == Matrix::Zero(dim, dim);

  const auto continuous = continuousPart(standardCatalog(), p1.spectrum());
  double disagreement = 0.0;
  for (const auto& f : continuous) {
    disagreement = std::max(disagreement, (p1.matrix(f) - p2.matrix(f)).cwiseAbs().maxCoeff());
  }
  std::vector<FunctionRule> homCatalog{parseRule("chi_point_0"), parseRule("chi:(0,1]")};
  for (const auto& f : monomialCatalog(3)) homCatalog.push_back(f);
  const auto h1 = homomorphismCheck(p1, homCatalog, c.tol);
  const auto h2 = homomorphismCheck(p2, homCatalog, c.tol);

  json body{{"witness", witness.id()},
            {"phi1Witness00", scalarToJson(w1(0, 0))},
            {"phi2Witness00", scalarToJson(w2(0, 0))},
            {"differenceNorm", realToJson(uniformBound(w1 - w2))},
            {"continuousRulesCompared", continuous.size()},
            {"continuousDisagreement", realToJson(disagreement)},
            {"phi1Homomorphism", h1},
            {"phi2Homomorphism", h2}};
  return named("nonunique-extensions", std::move(body), witnessOk && disagreement == 0.0 && h1.pass && h2.pass);
}

json banachDemo(const RunConfig& c) {
  const auto r = banachLimitDemo(c.n);
  return named("banach-limit", json(r), r.pass);
}

std::vector<json> extrapolateDemo(const RunConfig& c) {
  std::vector<json> out;
  const std::size_t dim = c.n;
  double worstRt = std::numeric_limits<double>::infinity();
  double worstRtEstimate = std::numeric_limits<double>::infinity();
  double worstDuality = 0.0;
  NormOptions options;
  options.seed = c.seed;
  for (std::size_t i = 0; i < c.trials; ++i) {
    const Matrix a = randomComplexMatrix(dim, dim, c.seed * 1000003ULL + i);
    worstRt = std::min(worstRt, rieszThorinCheck(a, 1.0, std::numeric_limits<double>::infinity(), 0.5, c.tol).margin);
    if (i < 10) worstRtEstimate = std::min(worstRtEstimate, rieszThorinCheck(a, 1.0, 2.0, 0.5, c.tol, options).margin);
    worstDuality = std::max(worstDuality, dualityIdentityCheck(a, 100, c.seed + i, 1e-12).worstDefect);
  }
  out.push_back(named("riesz-thorin",
                      json{{"check", "riesz-thorin"}, {"matrices", c.trials}, {"p0", 1}, {"p1", "inf"},
                           {"theta", 0.5}, {"margin", realToJson(worstRt)},
                           {"estimatedMargin", realToJson(worstRtEstimate)},
                           {"exactFlags", {true, true, true}}},
                      worstRt >= -c.tol && worstRtEstimate >= -c.tol));
  out.push_back(named("duality-identity",
                      json{{"check", "duality-identity"}, {"matrices", c.trials}, {"trialsPerMatrix", 100},
                           {"worstDefect", realToJson(worstDuality)}},
                      worstDuality <= 1e-12));

  const auto set = CompactRealSet::sigma0(std::min<std::size_t>(c.n, 12));
  const auto catalog = standardCatalog();
  const std::vector<double> ps{1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()};
  const auto left = extendCalculusLeft(set, catalog, ps, c.tol, c.seed);
  out.push_back(named("extend-calculus-left", json(left), left.pass));

  const auto rightDiag = adjointCalculusRight(set, catalog, c.tol, c.seed);
  out.push_back(named("adjoint-calculus-right:diagonal", json(rightDiag), rightDiag.pass));
  std::vector<FunctionRule> integerCatalog{parseRule("one"), parseRule("id"), parseRule("poly:2,-3,1"),
                                           parseRule("chi_point_0"), parseRule("chi_point_1"),
                                           parseRule("chi_gt_1/2")};
  const auto idem = idempotentCalculus(randomIdempotent(6, 3, c.seed), SpaceTag::lp(1.0, 6));
  const auto rightIdem = adjointCalculusRight(idem, integerCatalog, 0.0, c.seed);
  out.push_back(named("adjoint-calculus-right:idempotent", json(rightIdem), rightIdem.pass));
  return out;
}

std::vector<json> rangeInclusionSuite(const RunConfig& c) {
  const std::size_t n = std::max<std::size_t>(c.n, 4);
  const auto set = CompactRealSet::sigma0(n);
  auto catalog = standardCatalog();
  for (const auto& f : leftAnnihilatorCatalog(n)) catalog.push_back(f);
  for (const auto& f : rightAnnihilatorCatalog(n)) catalog.push_back(f);
  std::vector<json> out;
  for (const auto& lambda : {Rational(0), Rational(-1, 3), Rational(1, 4)}) {
    const auto r = rangeInclusionCheck(set, lambda, catalog);
    out.push_back(named("range-inclusion:lambda=" + lambda.toString(), json(r), r.pass));
  }
  // P = chi_sigma(T') = I (+) 0 for T' = T (+) omega I_2.
  const auto sum = directSumCalculus(diagonalCalculus(set), Rational(1) + set.max(), 2);
  const auto chiSigma = FunctionRule::interval(set.min(), true, set.max(), true);
  const Matrix p = sum.matrix(chiSigma);
  Matrix expected = Matrix::Zero(p.rows(), p.cols());
  expected.topLeftCorner(static_cast<Eigen::Index>(set.size()), static_cast<Eigen::Index>(set.size())).setIdentity();
  out.push_back(named("direct-sum-projection",
                      json{{"rule", chiSigma.id()}, {"dimension", p.rows()},
                           {"worstDefect", realToJson((p - expected).cwiseAbs().maxCoeff())}},
                      p == expected));
  return out;
}

std::vector<json> checkAll(const RunConfig& c) {
  std::vector<json> out;
  auto append = [&](std::vector<json> more) {
    for (auto& j : more) out.push_back(std::move(j));
  };
  out.push_back(algebraSuite(c));
  append(calculusCheck(c));
  append(rangeInclusionSuite(c));
  append(c0Demo(c));
  RunConfig even = c;
  even.n = evenAtLeastFour(c.n);
  out.push_back(ell1Demo(even));
  out.push_back(nonuniqueDemo(c));
  out.push_back(banachDemo(c));
  append(extrapolateDemo(c));
  return out;
}

json configJson(const RunConfig& c) {
  json j{{"n", c.n}, {"tol", realToJson(c.tol)}, {"seed", c.seed}, {"trials", c.trials}, {"format", c.format}};
  if (!c.set.empty()) j["set"] = c.set;
  if (!c.rule.empty()) j["rule"] = c.rule;
  return j;
}

std::string renderText(const json& envelope) {
  std::ostringstream os;
  os << "command: " << envelope["command"].get<std::string>() << "\n";
  for (const auto& r : envelope["results"]) {
    os << (r["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << r["name"].get<std::string>() << "\n";
    for (const auto& [k, v] : r.items()) {
      if (k == "name" || k == "pass") continue;
      os << "    " << k << " = " << renderValue(v) << "\n";
    }
  }
  os << (envelope["pass"].get<bool>() ? "overall: PASS" : "overall: FAIL") << "\n";
  return os.str();
}

}  // namespace

json runCommand(const RunConfig& c) {
  std::vector<json> results;
  if (c.command == "set build") {
    results.push_back(setBuild(c));
  } else if (c.command == "norm") {
    results.push_back(normOf(c));
  } else if (c.command == "calculus check") {
    results = calculusCheck(c);
  } else if (c.command == "demo c0-no-extension") {
    results = c0Demo(c);
  } else if (c.command == "demo ell1-iso") {
    results.push_back(ell1Demo(c));
  } else if (c.command == "demo nonunique-extensions") {
    results.push_back(nonuniqueDemo(c));
  } else if (c.command == "demo banach-limit") {
    results.push_back(banachDemo(c));
  } else if (c.command == "demo extrapolate") {
    results = extrapolateDemo(c);
  } else if (c.command == "check all") {
    results = checkAll(c);
  } else {
    throw ParameterError("unknown command '" + c.command + "'");
  }
  bool pass = true;
  for (const auto& r : results) pass = pass && r["pass"].get<bool>();

  json envelope = json::object();
  envelope["schemaVersion"] = 1;
  envelope["command"] = c.command;
  envelope["config"] = configJson(c);
  envelope["results"] = std::move(results);
  envelope["pass"] = pass;
  return envelope;
}

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-truncation functional calculus demonstrations", "acfc"};
  app.require_subcommand(1);
  RunConfig config;

  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "truncation size")->check(CLI::PositiveNumber);
    sub->add_option("--tol", config.tol, "tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "64-bit seed for all randomized estimation");
    sub->add_option("--trials", config.trials, "number of random trials");
    sub->add_option("--format", config.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", config.output, "write the report to this file");
    sub->add_option("--set", config.set, "sigma0:<n> | grid:<a>,<b>,<n> | points:<t1>,...");
    sub->add_option("--rule", config.rule, "rule identifier, e.g. chi_leq_0 or poly:1,0");
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& description,
                  const std::string& command) {
    auto* sub = parent->add_subcommand(name, description);
    addCommon(sub);
    sub->callback([&config, command] { config.command = command; });
    return sub;
  };

  auto* set = app.add_subcommand("set", "compact set utilities");
  set->require_subcommand(1);
  leaf(set, "build", "build and print a compact set", "set build");
  leaf(&app, "norm", "sup, variation and BV/AC norms of a rule on a set", "norm");
  auto* calculus = app.add_subcommand("calculus", "functional calculus checks");
  calculus->require_subcommand(1);
  leaf(calculus, "check", "homomorphism and bound reports for every shipped calculus", "calculus check");
  auto* demo = app.add_subcommand("demo", "demonstrations");
  demo->require_subcommand(1);
  leaf(demo, "c0-no-extension", "c0 obstruction: tail and constraint defects", "demo c0-no-extension");
  leaf(demo, "ell1-iso", "l1 <-> AC(sigma0) isomorphism bounds", "demo ell1-iso");
  leaf(demo, "nonunique-extensions", "two inequivalent BV extensions", "demo nonunique-extensions");
  leaf(demo, "banach-limit", "limit functional operators T and S", "demo banach-limit");
  leaf(demo, "extrapolate", "Riesz-Thorin, duality and calculus transfer", "demo extrapolate");
  auto* check = app.add_subcommand("check", "invariant suites");
  check->require_subcommand(1);
  leaf(check, "all", "run every suite", "check all");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  json envelope;
  try {
    envelope = runCommand(config);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = config.format == "json" ? envelope.dump(2) + "\n" : renderText(envelope);
  if (config.output.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      err << "error: --output: cannot open '" << config.output << "'\n";
      return 2;
    }
    file << text;
  }
  return envelope["pass"].get<bool>() ? 0 : 1;
}

}  // namespace acfc::cli
