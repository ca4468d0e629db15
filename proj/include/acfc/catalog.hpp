#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "acfc/function_rule.hpp"
#include "acfc/sets_functions.hpp"

namespace acfc {

/// Resolves a rule identifier to a FunctionRule.
///
/// Accepted forms:
///   one, zero, id
///   poly:c_d,...,c_1,c_0        coefficients, highest degree first
///   chi_leq_<a>  chi_lt_<a>  chi_geq_<a>  chi_gt_<a>  chi_point_<a>
///   chi:[a,b]  chi:(a,b]  chi:[a,b)  chi:(a,b)   (a may be -inf, b inf)
/// where <a> is a rational such as 0, -1/3 or 0.25.
FunctionRule parseRule(std::string_view id);

/// Resolves a set descriptor: sigma0:<n>, grid:<a>,<b>,<n>, or
/// points:<t1>,<t2>,... (generic finite set, no limit markers).
CompactRealSet parseSet(std::string_view descriptor);

/// Twelve rules mixing polynomials, interval and point indicators, products
/// and a complex multiple; used by the algebra and calculus suites.
std::vector<FunctionRule> standardCatalog();

/// Polynomials 1, t, ..., t^maxDegree.
std::vector<FunctionRule> monomialCatalog(int maxDegree);

/// Catalog members that are exactly continuous at every limit marker of the
/// set (the AC part of the catalog).
std::vector<FunctionRule> continuousPart(const std::vector<FunctionRule>& catalog,
                                         const CompactRealSet& set);

/// Random rule built from catalog leaves with random real coefficients; used
/// by randomized demos. Deterministic in `seed`.
FunctionRule randomRule(std::uint64_t seed);

}  // namespace acfc
