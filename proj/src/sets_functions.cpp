#include "acfc/sets_functions.hpp"

#include <algorithm>
#include <cmath>

#include "acfc/errors.hpp"

namespace acfc {

CompactRealSet CompactRealSet::sigma0(std::size_t n) {
  if (n == 0) throw InvalidArgument("sigma0: n must be at least 1");
  CompactRealSet s;
  s.points_.resize(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    s.points_[sigma0Index(n, k)] = Rational(k % 2 == 0 ? 1 : -1, kk);
  }
  s.points_[sigma0ZeroIndex(n)] = Rational(0);
  s.limitMarkers_ = {Rational(0)};
  s.family_ = SetFamily::Sigma0Truncation;
  s.familyN_ = n;
  return s;
}

CompactRealSet CompactRealSet::intervalGrid(Rational a, Rational b, std::size_t n) {
  if (n == 0) throw InvalidArgument("intervalGrid: n must be at least 1");
  CompactRealSet s;
  if (n == 1) {
    s.points_ = {a};
  } else {
    if (!(a < b)) throw InvalidArgument("intervalGrid: need a < b");
    const Rational step = (b - a) / Rational(static_cast<std::int64_t>(n - 1));
    for (std::size_t i = 0; i < n; ++i) {
      s.points_.push_back(a + step * Rational(static_cast<std::int64_t>(i)));
    }
    s.points_.back() = b;
  }
  s.family_ = SetFamily::IntervalGrid;
  s.familyN_ = n;
  s.gridA_ = a;
  s.gridB_ = b;
  return s;
}

CompactRealSet CompactRealSet::fromPoints(std::vector<Rational> points,
                                          std::vector<Rational> limitMarkers) {
  if (points.empty()) throw InvalidArgument("compact set needs at least one point");
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw InvalidArgument("compact set points must be distinct");
  }
  std::sort(limitMarkers.begin(), limitMarkers.end());
  limitMarkers.erase(std::unique(limitMarkers.begin(), limitMarkers.end()), limitMarkers.end());
  for (const auto& m : limitMarkers) {
    if (!std::binary_search(points.begin(), points.end(), m)) {
      throw InvalidArgument("limit marker " + m.toString() + " is not a point of the set");
    }
  }
  CompactRealSet s;
  s.points_ = std::move(points);
  s.limitMarkers_ = std::move(limitMarkers);
  return s;
}

std::vector<double> CompactRealSet::pointsAsDouble() const {
  std::vector<double> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.toDouble());
  return out;
}

std::optional<std::size_t> CompactRealSet::indexOf(const Rational& t) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), t);
  if (it == points_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

bool CompactRealSet::isLimitMarker(const Rational& t) const {
  return std::binary_search(limitMarkers_.begin(), limitMarkers_.end(), t);
}

std::string CompactRealSet::familyDescriptor() const {
  switch (family_) {
    case SetFamily::Sigma0Truncation:
      return "sigma0-truncation(" + std::to_string(familyN_) + ")";
    case SetFamily::IntervalGrid:
      return "interval-grid(" + gridA_.toString() + "," + gridB_.toString() + "," +
             std::to_string(familyN_) + ")";
    case SetFamily::GenericFinite:
      break;
  }
  return "generic-finite";
}

CompactRealSet CompactRealSet::withPoint(const Rational& extra) const {
  auto pts = points_;
  pts.push_back(extra);
  return fromPoints(std::move(pts), limitMarkers_);
}

// Negatives -1/k (k odd) ascend as k grows; positives 1/k (k even) ascend as
// k shrinks.
std::size_t sigma0ZeroIndex(std::size_t n) { return (n + 1) / 2; }

std::size_t sigma0Index(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw InvalidArgument("sigma0Index: k out of range");
  const std::size_t zero = sigma0ZeroIndex(n);
  if (k % 2 == 1) return (k - 1) / 2;
  const std::size_t positives = n / 2;
  return zero + 1 + (positives - k / 2);
}

BVFunction::BVFunction(CompactRealSet set, std::vector<Scalar> values,
                       std::optional<FunctionRule> sourceRule)
    : set_(std::move(set)), values_(std::move(values)), sourceRule_(std::move(sourceRule)) {
  if (values_.size() != set_.size()) {
    throw InvalidArgument("BVFunction: " + std::to_string(values_.size()) + " values for " +
                          std::to_string(set_.size()) + " points");
  }
}

BVFunction restrict(const FunctionRule& rule, const CompactRealSet& set) {
  std::vector<Scalar> values;
  values.reserve(set.size());
  for (const auto& t : set.points()) values.push_back(rule(t));
  return BVFunction(set, std::move(values), rule);
}

double variation(const BVFunction& f) {
  double total = 0.0;
  const auto& v = f.values();
  for (std::size_t i = 1; i < v.size(); ++i) total += std::abs(v[i] - v[i - 1]);
  return total;
}

double supNorm(const BVFunction& f) {
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double bvNorm(const BVFunction& f) { return supNorm(f) + variation(f); }

namespace {

void requireSameSet(const BVFunction& f, const BVFunction& g) {
  if (!(f.set() == g.set())) throw SetMismatch("functions live on different sets");
}

template <typename Op>
BVFunction combine(const BVFunction& f, const BVFunction& g, Op op,
                   std::optional<FunctionRule> rule) {
  requireSameSet(f, g);
  std::vector<Scalar> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(f.at(i), g.at(i));
  return BVFunction(f.set(), std::move(out), std::move(rule));
}

}  // namespace

BVFunction add(const BVFunction& f, const BVFunction& g) {
  std::optional<FunctionRule> rule;
  if (f.sourceRule() && g.sourceRule()) rule = *f.sourceRule() + *g.sourceRule();
  return combine(f, g, std::plus<>{}, std::move(rule));
}

BVFunction mul(const BVFunction& f, const BVFunction& g) {
  std::optional<FunctionRule> rule;
  if (f.sourceRule() && g.sourceRule()) rule = *f.sourceRule() * *g.sourceRule();
  return combine(f, g, std::multiplies<>{}, std::move(rule));
}

BVFunction scale(Scalar c, const BVFunction& f) {
  std::vector<Scalar> out(f.values());
  for (auto& v : out) v *= c;
  std::optional<FunctionRule> rule;
  if (f.sourceRule()) rule = c * *f.sourceRule();
  return BVFunction(f.set(), std::move(out), std::move(rule));
}

bool vanishesAtOrBelow(const BVFunction& f, const Rational& lambda) {
  const auto& pts = f.set().points();
  for (std::size_t i = 0; i < pts.size() && pts[i] <= lambda; ++i) {
    if (f.at(i) != Scalar(0.0)) return false;
  }
  return true;
}

bool vanishesAtOrAbove(const BVFunction& f, const Rational& lambda) {
  const auto& pts = f.set().points();
  for (std::size_t i = pts.size(); i-- > 0 && pts[i] >= lambda;) {
    if (f.at(i) != Scalar(0.0)) return false;
  }
  return true;
}

ContinuityReport isContinuousAtLimit(const FunctionRule& rule, std::size_t n, std::size_t m,
                                     double tol) {
  if (n == 0) throw InvalidArgument("isContinuousAtLimit: n must be at least 1");
  if (m >= n) throw InvalidArgument("isContinuousAtLimit: need m < n tail samples");
  const Scalar atZero = rule(Rational(0));
  ContinuityReport report;
  const auto nn = static_cast<std::int64_t>(n);
  // The m largest odd k and m largest even k not exceeding n.
  for (int parity = 0; parity < 2; ++parity) {
    std::int64_t k = (nn % 2 == parity) ? nn : nn - 1;
    for (std::size_t taken = 0; taken < m && k >= 1; ++taken, k -= 2) {
      const Rational t(k % 2 == 0 ? 1 : -1, k);
      const double d = std::abs(rule(t) - atZero);
      ++report.samples;
      if (report.samples == 1 || d > report.defect) {
        report.defect = d;
        report.worstPoint = t;
      }
    }
  }
  report.continuous = report.defect <= tol;
  return report;
}

bool isContinuousAtMarkers(const FunctionRule& rule, const CompactRealSet& set) {
  for (const auto& marker : set.limitMarkers()) {
    const Scalar value = rule(marker);
    if (rule.limitFromLeft(marker) != value || rule.limitFromRight(marker) != value) return false;
  }
  return true;
}

}  // namespace acfc
